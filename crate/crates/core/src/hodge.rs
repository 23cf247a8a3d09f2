//! Finite-dimensional Hodge theory for the bigraded complex.
//!
//! The adapted exterior basis is declared orthonormal, so adjoints are conjugate
//! transposes and the Laplacian `□ = D_{q-1} D_{q-1}* + D_q* D_q` is an exact
//! Hermitian matrix whose kernel is isomorphic to `H^{p,q}`.

use rayon::prelude::*;

use crate::algebra::Subalgebra;
use crate::bigraded::{adapt, AdaptedBasis};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, ExactVector};

/// The three-term window `C^{q-1} → C^q → C^{q+1}` around one bidegree.
#[derive(Clone, Debug)]
pub struct HodgeProblem {
    /// `D_{q-1} : C^{q-1} → C^q`; it has zero columns when `q = 0`.
    lower: ExactMatrix,
    /// `D_q : C^q → C^{q+1}`.
    upper: ExactMatrix,
}

impl HodgeProblem {
    /// Checks shapes and `D_q D_{q-1} = 0`.
    pub fn new(lower: ExactMatrix, upper: ExactMatrix) -> Result<Self> {
        if lower.rows() != upper.cols() {
            return Err(Error::DimensionMismatch {
                expected: upper.cols(),
                found: lower.rows(),
            });
        }
        if !upper.mul(&lower)?.is_zero() {
            return Err(Error::CompositionNonZero);
        }
        Ok(Self { lower, upper })
    }

    /// The window at bidegree `(p, q)` of the `d′` complex.
    pub fn bigraded(adapted: &AdaptedBasis<'_>, p: usize, q: usize) -> Self {
        let lower = if q == 0 {
            ExactMatrix::zeros(adapted.space(p, 0).dim(), 0)
        } else {
            adapted.dprime_matrix(p, q - 1)
        };
        Self::new(lower, adapted.dprime_matrix(p, q)).expect("d′ squares to zero")
    }

    pub fn lower(&self) -> &ExactMatrix {
        &self.lower
    }

    pub fn upper(&self) -> &ExactMatrix {
        &self.upper
    }

    /// `dim C^{p,q}`.
    pub fn dim(&self) -> usize {
        self.upper.cols()
    }
}

/// `□ = D_{q-1} D_{q-1}* + D_q* D_q`.
pub fn laplacian(hp: &HodgeProblem) -> ExactMatrix {
    let down = hp.lower.mul(&hp.lower.conj_transpose()).expect("shapes checked");
    let up = hp.upper.conj_transpose().mul(&hp.upper).expect("shapes checked");
    down.add(&up).expect("both square of the same size")
}

/// Exact basis of `ker □`.
pub fn harmonic_basis(hp: &HodgeProblem) -> Vec<ExactVector> {
    if hp.dim() == 0 {
        return Vec::new();
    }
    laplacian(hp).nullspace()
}

/// `dim ker □^{p,q}` for `q = 0..=dim h`.
pub fn harmonic_dims(h: &Subalgebra<'_>, p: usize) -> Vec<usize> {
    let adapted = adapt(h);
    (0..=adapted.h_dim())
        .into_par_iter()
        .map(|q| {
            let hp = HodgeProblem::bigraded(&adapted, p, q);
            hp.dim() - laplacian(&hp).rank()
        })
        .collect()
}
