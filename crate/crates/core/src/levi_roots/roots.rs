//! Simultaneous eigenspaces of a commuting family `ad_{T_1}, …, ad_{T_r}` and
//! the standard involutive structures built from them.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::exactnum::poly::{charpoly, degree, eval, squarefree_part, ExactPoly};
use crate::exactnum::{is_zero_vec, ExactMatrix, ExactVector, GaussianRational};

/// One root `α = (α_1, …, α_r)` with a basis of `g_α = {X : [T_j, X] = α_j X}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpace {
    pub alpha: Vec<GaussianRational>,
    pub space: Vec<ExactVector>,
}

impl RootSpace {
    /// Roots are positive when the last nonzero coordinate has positive
    /// imaginary part (real part when that coordinate is real).
    pub fn is_positive(&self) -> bool {
        is_positive_root(&self.alpha)
    }
}

pub fn is_positive_root(alpha: &[GaussianRational]) -> bool {
    alpha
        .iter()
        .rev()
        .find(|a| !a.is_zero())
        .map(|a| if a.im().is_zero() { a.re().is_positive() } else { a.im().is_positive() })
        .unwrap_or(false)
}

/// `g = t ⊕ ⊕_α g_α` for a commuting family acting diagonalizably with
/// eigenvalues in Q(i).
#[derive(Clone, Debug)]
pub struct RootDecomposition<'g> {
    algebra: &'g LieAlgebra,
    torus: Vec<ExactVector>,
    roots: Vec<RootSpace>,
    zero_space: Vec<ExactVector>,
}

impl<'g> RootDecomposition<'g> {
    pub fn algebra(&self) -> &'g LieAlgebra {
        self.algebra
    }

    pub fn torus(&self) -> &[ExactVector] {
        &self.torus
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }

    pub fn roots(&self) -> &[RootSpace] {
        &self.roots
    }

    pub fn zero_space(&self) -> &[ExactVector] {
        &self.zero_space
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootSpace> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn root_of(&self, alpha: &[GaussianRational]) -> Option<&RootSpace> {
        self.roots.iter().find(|r| r.alpha == alpha)
    }

    /// `Σ dim g_α + dim g_0`.
    pub fn total_dim(&self) -> usize {
        self.zero_space.len() + self.roots.iter().map(|r| r.space.len()).sum::<usize>()
    }
}

/// Computes the joint eigenspaces of `ad_{T_j}` exactly.
///
/// Candidate eigenvalues are the roots of the squarefree part of each
/// characteristic polynomial: they are located in floating point,
/// rationalized by continued fractions and accepted only after exact
/// evaluation. Joint eigenspaces are kernels of the stacked `ad_{T_j} − α_j`.
pub fn root_decomposition<'g>(g: &'g LieAlgebra, torus: &[ExactVector]) -> Result<RootDecomposition<'g>> {
    let n = g.dim();
    for (a, ta) in torus.iter().enumerate() {
        if ta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ta.len(),
            });
        }
        for (b, tb) in torus.iter().enumerate().skip(a + 1) {
            if !is_zero_vec(&g.bracket(ta, tb)?) {
                return Err(Error::NonCommutingTorus(a, b));
            }
        }
    }
    let ads: Vec<ExactMatrix> = torus.iter().map(|t| g.ad_matrix(t)).collect::<Result<_>>()?;
    let spectra: Vec<Vec<GaussianRational>> = ads
        .iter()
        .enumerate()
        .map(|(j, a)| exact_eigenvalues(a).ok_or(Error::EigenvaluesOutsideField(j)))
        .collect::<Result<_>>()?;

    // Refine joint eigenspaces one torus element at a time.
    let mut cells: Vec<(Vec<GaussianRational>, ExactMatrix)> = vec![(Vec::new(), ExactMatrix::zeros(0, n))];
    for (ad, spectrum) in ads.iter().zip(&spectra) {
        let mut next = Vec::new();
        for (alpha, stack) in &cells {
            for lam in spectrum {
                let shifted = ad.sub(&ExactMatrix::identity(n).scale(lam)).expect("square");
                let stacked = stack.vstack(&shifted).expect("same width");
                if stacked.rank() < n {
                    let mut a = alpha.clone();
                    a.push(lam.clone());
                    next.push((a, stacked));
                }
            }
        }
        cells = next;
    }

    let mut roots = Vec::new();
    let mut zero_space = Vec::new();
    let mut total = 0;
    for (alpha, stack) in cells {
        let space: Vec<ExactVector> = if stack.rows() == 0 {
            (0..n).map(|k| g.basis_vector(k)).collect()
        } else {
            stack.nullspace().into_iter().map(|v| normalize_leading(&v)).collect()
        };
        total += space.len();
        if alpha.iter().all(Zero::is_zero) {
            zero_space = space;
        } else {
            roots.push(RootSpace { alpha, space });
        }
    }
    if total != n {
        return Err(Error::InvalidParameters(format!(
            "torus does not act diagonalizably: eigenspaces span {total} of {n} dimensions"
        )));
    }
    roots.sort_by_key(|r| (leading_index(&r.space[0]), !r.is_positive()));
    Ok(RootDecomposition {
        algebra: g,
        torus: torus.to_vec(),
        roots,
        zero_space,
    })
}

fn leading_index(v: &[GaussianRational]) -> usize {
    v.iter().position(|c| !c.is_zero()).unwrap_or(v.len())
}

/// Scales `v` so its first nonzero entry is 1.
fn normalize_leading(v: &[GaussianRational]) -> ExactVector {
    match v.iter().find(|c| !c.is_zero()).and_then(GaussianRational::inv) {
        Some(inv) => v.iter().map(|c| c * &inv).collect(),
        None => v.to_vec(),
    }
}

/// The distinct eigenvalues of `a` when all of them lie in Q(i).
pub fn exact_eigenvalues(a: &ExactMatrix) -> Option<Vec<GaussianRational>> {
    let p = squarefree_part(&charpoly(a));
    let d = degree(&p).unwrap_or(0);
    let mut found: Vec<GaussianRational> = Vec::new();
    for z in durand_kerner(&p) {
        let candidate = GaussianRational::new(rationalize(z.re)?, rationalize(z.im)?);
        if eval(&p, &candidate).is_zero() && !found.contains(&candidate) {
            found.push(candidate);
        }
    }
    (found.len() == d).then_some(found)
}

/// Simultaneous floating-point approximation of all roots of a monic polynomial.
fn durand_kerner(p: &ExactPoly) -> Vec<Complex64> {
    let d = match degree(p) {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let coeffs: Vec<Complex64> = p[..=d].iter().map(GaussianRational::to_complex).collect();
    let lead = coeffs[d];
    let f = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c) / lead;
    let bound = 1.0 + coeffs[..d].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut shift = 0.0f64;
        for k in 0..d {
            let denom: Complex64 = (0..d).filter(|&j| j != k).map(|j| z[k] - z[j]).product();
            let step = f(z[k]) / denom;
            z[k] -= step;
            shift = shift.max(step.norm());
        }
        if shift < 1e-15 * bound {
            break;
        }
    }
    z
}

/// Best continued-fraction approximation with denominator below `10^6`.
fn rationalize(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    const MAX_DEN: i64 = 1_000_000;
    let tol = 1e-7 * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a.to_i64()?;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DEN {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() < tol || (r - a).abs() < 1e-300 {
            return Some(BigRational::new(h1.into(), k1.into()));
        }
        r = 1.0 / (r - a);
    }
    (k1 != 0).then(|| BigRational::new(h1.into(), k1.into()))
}

/// The standard structure `h = u ⊕ ⊕_{α∈Δ₊} g_α`, where `u` is spanned by the
/// first `s` torus vectors and by `t` complex combinations
/// `T_{s+2k-1} + i T_{s+2k}` of the following ones.
///
/// `s + 2t ≤ r` is required. The result is elliptic when `s + 2t = r`, CR when
/// `s = 0`, and complex when both hold.
pub fn standard_structure<'g>(rd: &RootDecomposition<'g>, s: usize, t: usize) -> Result<Subalgebra<'g>> {
    let r = rd.rank();
    if s + 2 * t > r {
        return Err(Error::InvalidParameters(format!(
            "standard structure needs s + 2t <= rank, got s = {s}, t = {t}, rank = {r}"
        )));
    }
    let torus = rd.torus();
    let mut span: Vec<ExactVector> = torus[..s].to_vec();
    for k in 0..t {
        let (a, b) = (&torus[s + 2 * k], &torus[s + 2 * k + 1]);
        span.push(a.iter().zip(b).map(|(x, y)| x + &y.mul_i()).collect());
    }
    for root in rd.positive_roots() {
        span.extend(root.space.iter().cloned());
    }
    Subalgebra::new(rd.algebra(), span)
}

/// The declared torus of a built-in algebra as parent basis vectors.
pub fn builtin_torus(g: &LieAlgebra, indices: &[usize]) -> Vec<ExactVector> {
    indices.iter().map(|&k| g.basis_vector(k)).collect()
}
