//! Characteristic covectors, Levi forms and their exact inertia.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Subalgebra;
use crate::error::{Error, Result};
use crate::exactnum::poly::charpoly;
use crate::exactnum::{is_zero_vec, ExactMatrix, ExactVector, GaussianRational};

/// Eigenvalue tolerance of the floating-point inertia cross-check.
pub const FLOAT_EIGEN_TOLERANCE: f64 = 1e-9;

/// Upper bound on the number of grid covectors `hypocomplexity_flag` will visit.
pub const MAX_GRID_POINTS: u64 = 2_000_000;

/// A nonzero real covector on `g` annihilating `h + h̄`, in the dual basis of
/// the parent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicCovector {
    coeffs: ExactVector,
}

impl CharacteristicCovector {
    /// Validates reality, nonvanishing and annihilation of `h`.
    pub fn new(h: &Subalgebra<'_>, coeffs: ExactVector) -> Result<Self> {
        if coeffs.len() != h.parent().dim() {
            return Err(Error::DimensionMismatch {
                expected: h.parent().dim(),
                found: coeffs.len(),
            });
        }
        let annihilates = h
            .span()
            .iter()
            .all(|v| pair(&coeffs, v).is_zero());
        if is_zero_vec(&coeffs) || !coeffs.iter().all(GaussianRational::is_real) || !annihilates {
            return Err(Error::NotCharacteristic);
        }
        Ok(Self { coeffs })
    }

    /// `Σ c_k ξ_k` for a list of characteristic covectors.
    pub fn combine(h: &Subalgebra<'_>, basis: &[CharacteristicCovector], c: &[BigRational]) -> Result<Self> {
        let mut coeffs = vec![GaussianRational::zero(); h.parent().dim()];
        for (xi, ck) in basis.iter().zip(c) {
            for (acc, x) in coeffs.iter_mut().zip(&xi.coeffs) {
                *acc += &(x * &GaussianRational::real(ck.clone()));
            }
        }
        Self::new(h, coeffs)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// `ξ(v)`.
    pub fn apply(&self, v: &[GaussianRational]) -> GaussianRational {
        pair(&self.coeffs, v)
    }
}

fn pair(xi: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    xi.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Basis of the real annihilator of `h + h̄`.
///
/// A real covector kills `v` and `v̄` exactly when it kills `Re v` and `Im v`,
/// so the annihilator is the rational nullspace of those stacked rows.
pub fn characteristic_basis(h: &Subalgebra<'_>) -> Vec<CharacteristicCovector> {
    let n = h.parent().dim();
    let mut rows: Vec<ExactVector> = Vec::new();
    for v in h.span() {
        rows.push(v.iter().map(|c| GaussianRational::real(c.re().clone())).collect());
        rows.push(v.iter().map(|c| GaussianRational::real(c.im().clone())).collect());
    }
    let null = if rows.is_empty() {
        (0..n).map(|k| crate::exactnum::unit_vector(n, k)).collect()
    } else {
        ExactMatrix::from_rows(&rows).expect("rows share the parent length").nullspace()
    };
    null.into_iter().map(|coeffs| CharacteristicCovector { coeffs }).collect()
}

/// An exact Hermitian matrix indexed by the spanning vectors of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviMatrix(ExactMatrix);

impl LeviMatrix {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if m.rows() != m.cols() || !m.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }
}

/// `𝓛_ξ(v_a, v_b) = (−i/2) ξ([v_a, conj(v_b)])` on the spanning vectors of `h`.
pub fn levi_form(h: &Subalgebra<'_>, xi: &CharacteristicCovector) -> Result<LeviMatrix> {
    let g = h.parent();
    if xi.coeffs.len() != g.dim() || h.span().iter().any(|v| !xi.apply(v).is_zero()) {
        return Err(Error::NotCharacteristic);
    }
    let factor = GaussianRational::from_frac(-1, 2).mul_i();
    let conj: Vec<ExactVector> = h.conjugate_span();
    let k = h.dim();
    let mut m = ExactMatrix::zeros(k, k);
    for (a, va) in h.span().iter().enumerate() {
        for (b, vb) in conj.iter().enumerate() {
            let w = g.bracket(va, vb)?;
            m.set(a, b, &factor * &xi.apply(&w));
        }
    }
    LeviMatrix::new(m)
}

/// Inertia `(n_pos, n_neg, n_zero)` of a Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_indefinite(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

/// Exact inertia from the characteristic polynomial.
///
/// A Hermitian matrix has a real characteristic polynomial with only real
/// roots, so Descartes' rule of signs counts positive roots exactly, the same
/// rule on `p(−λ)` counts negative roots, and the multiplicity of zero is the
/// order of vanishing at the origin.
pub fn levi_signature(m: &LeviMatrix) -> Signature {
    let p = charpoly(m.matrix());
    let real: Vec<BigRational> = p
        .iter()
        .map(|c| {
            debug_assert!(c.is_real(), "Hermitian characteristic polynomial is real");
            c.re().clone()
        })
        .collect();
    let zero = real.iter().position(|c| !c.is_zero()).unwrap_or(real.len());
    let reflected: Vec<BigRational> = real
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    Signature {
        positive: sign_changes(&real),
        negative: sign_changes(&reflected),
        zero,
    }
}

fn sign_changes(coeffs: &[BigRational]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Floating-point inertia from a Hermitian eigen-solve, for cross-checking.
pub fn levi_signature_float(m: &LeviMatrix) -> Signature {
    let n = m.dim();
    if n == 0 {
        return Signature {
            positive: 0,
            negative: 0,
            zero: 0,
        };
    }
    let dense = DMatrix::<Complex64>::from_fn(n, n, |r, c| m.matrix().get(r, c).to_complex());
    let eig = dense.symmetric_eigen();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for &lam in eig.eigenvalues.iter() {
        if lam > FLOAT_EIGEN_TOLERANCE {
            sig.positive += 1;
        } else if lam < -FLOAT_EIGEN_TOLERANCE {
            sig.negative += 1;
        } else {
            sig.zero += 1;
        }
    }
    sig
}

/// Outcome of the Levi-form grid search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypocomplexityFlag {
    /// The characteristic set is zero (elliptic structure), so the test is vacuous.
    Vacuous,
    /// Every sampled covector gave an indefinite Levi form. This is grid
    /// evidence, not proof.
    IndefiniteOnGrid { points: usize, max_denominator: u32 },
    /// The Levi form is semidefinite at this covector.
    FailsAtWitness {
        coordinates: Vec<BigRational>,
        covector: CharacteristicCovector,
        signature: Signature,
    },
}

impl HypocomplexityFlag {
    pub const GRID_LABEL: &'static str = "grid evidence, not proof";

    pub fn describe(&self) -> String {
        match self {
            Self::Vacuous => "vacuous: no nonzero characteristic covector".to_string(),
            Self::IndefiniteOnGrid { points, max_denominator } => format!(
                "indefinite at all {points} grid covectors (denominators <= {max_denominator}); {}",
                Self::GRID_LABEL
            ),
            Self::FailsAtWitness {
                coordinates, signature, ..
            } => {
                let coords: Vec<String> = coordinates.iter().map(ToString::to_string).collect();
                format!(
                    "semidefinite at witness ({}) with signature {signature}",
                    coords.join(", ")
                )
            }
        }
    }
}

/// Grid values in `[−1, 1]` with denominators `≤ max_den`, ordered by
/// denominator and then `a, −a` for increasing `a`: `0, 1, −1, 1/2, −1/2, …`.
fn grid_values(max_den: u32) -> Vec<(u32, BigRational)> {
    let mut values = vec![(1, BigRational::zero())];
    for b in 1..=max_den {
        for a in 1..=b {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let v = BigRational::new(i64::from(a).into(), i64::from(b).into());
            values.push((b, v.clone()));
            values.push((b, -v));
        }
    }
    values
}

/// Samples the Levi form on a rational grid in the coordinates of
/// [`characteristic_basis`] and reports the first semidefinite covector.
///
/// Points are visited in order of their largest denominator, then
/// lexicographically in the value order of `grid_values`.
pub fn hypocomplexity_flag_with(h: &Subalgebra<'_>, max_denominator: u32) -> Result<HypocomplexityFlag> {
    let basis = characteristic_basis(h);
    if basis.is_empty() {
        return Ok(HypocomplexityFlag::Vacuous);
    }
    let values = grid_values(max_denominator);
    let k = basis.len();
    let total = (values.len() as u64)
        .checked_pow(k as u32)
        .filter(|&t| t <= MAX_GRID_POINTS)
        .ok_or_else(|| Error::InvalidParameters(format!("grid of {}^{k} points is too large", values.len())))?;
    let mut points: Vec<(u32, Vec<usize>)> = (1..total)
        .map(|mut flat| {
            let mut idx = vec![0usize; k];
            for slot in idx.iter_mut().rev() {
                *slot = (flat % values.len() as u64) as usize;
                flat /= values.len() as u64;
            }
            let height = idx.iter().map(|&i| values[i].0).max().unwrap_or(1);
            (height, idx)
        })
        .collect();
    points.sort();
    let witness = points.par_iter().find_map_first(|(_, idx)| {
        let coords: Vec<BigRational> = idx.iter().map(|&i| values[i].1.clone()).collect();
        let xi = CharacteristicCovector::combine(h, &basis, &coords).ok()?;
        let sig = levi_signature(&levi_form(h, &xi).ok()?);
        (!sig.is_indefinite()).then_some((coords, xi, sig))
    });
    Ok(match witness {
        Some((coordinates, covector, signature)) => HypocomplexityFlag::FailsAtWitness {
            coordinates,
            covector,
            signature,
        },
        None => HypocomplexityFlag::IndefiniteOnGrid {
            points: points.len(),
            max_denominator,
        },
    })
}

/// [`hypocomplexity_flag_with`] on the default grid (denominators `≤ 4`).
pub fn hypocomplexity_flag(h: &Subalgebra<'_>) -> Result<HypocomplexityFlag> {
    hypocomplexity_flag_with(h, 4)
}

/// Scales a covector by a nonzero rational.
pub fn scale_covector(h: &Subalgebra<'_>, xi: &CharacteristicCovector, c: &BigRational) -> Result<CharacteristicCovector> {
    CharacteristicCovector::combine(h, std::slice::from_ref(xi), std::slice::from_ref(c))
}

/// `num/den` as a `BigRational`.
pub fn rational(num: i64, den: i64) -> BigRational {
    if den == 1 {
        BigRational::from_integer(num.into())
    } else {
        BigRational::new(num.into(), den.into())
    }
}
