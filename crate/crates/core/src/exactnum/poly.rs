//! Dense univariate polynomials over Q(i), coefficients stored lowest degree first.

use num_traits::{One, Zero};

use super::{ExactMatrix, GaussianRational};

pub type ExactPoly = Vec<GaussianRational>;

fn trim(mut p: ExactPoly) -> ExactPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree of a polynomial; `None` for the zero polynomial.
pub fn degree(p: &[GaussianRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// `det(λI − A)` by the Faddeev–LeVerrier recursion.
pub fn charpoly(a: &ExactMatrix) -> ExactPoly {
    let n = a.rows();
    assert_eq!(n, a.cols(), "characteristic polynomial needs a square matrix");
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let identity = ExactMatrix::identity(n);
    let mut m = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        m = a
            .mul(&m)
            .and_then(|am| am.add(&identity.scale(&coeffs[n - k + 1])))
            .expect("square");
        let am = a.mul(&m).expect("square");
        let trace: GaussianRational = (0..n).map(|i| am.get(i, i)).sum();
        coeffs[n - k] = -(trace / GaussianRational::from(k as i64));
    }
    coeffs
}

pub fn eval(p: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    p.iter().rev().fold(GaussianRational::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[GaussianRational]) -> ExactPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * &GaussianRational::from(k as i64))
        .collect()
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn div_rem(a: &[GaussianRational], b: &[GaussianRational]) -> (ExactPoly, ExactPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut rem = trim(a.to_vec());
    let mut quot = vec![GaussianRational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] * &lead_inv;
        for (k, c) in b.iter().enumerate().take(db + 1) {
            rem[dr - db + k] -= &(&factor * c);
        }
        quot[dr - db] = factor;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Monic greatest common divisor.
pub fn gcd(a: &[GaussianRational], b: &[GaussianRational]) -> ExactPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&y).is_some() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn monic(p: &[GaussianRational]) -> ExactPoly {
    let p = trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

/// `p / gcd(p, p′)`, monic: the product of the distinct linear factors of `p`.
pub fn squarefree_part(p: &[GaussianRational]) -> ExactPoly {
    let g = gcd(p, &derivative(p));
    monic(&div_rem(p, &g).0)
}
