//! Exact scalar arithmetic over Q(i) and exact linear algebra.

mod gaussian;
mod matrix;
pub mod poly;

pub use gaussian::{gr, GaussianRational};
pub use matrix::{span_rank, ExactMatrix, ExactVector};

/// Entrywise conjugate of a vector.
pub fn conj_vec(v: &[GaussianRational]) -> ExactVector {
    v.iter().map(GaussianRational::conj).collect()
}

/// Hermitian inner product `<u, v> = sum u_k conj(v_k)`.
pub fn inner(u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    u.iter().zip(v).map(|(a, b)| a * &b.conj()).sum()
}

/// `a*u + b*v` for vectors of equal length.
pub fn lin_comb(
    a: &GaussianRational,
    u: &[GaussianRational],
    b: &GaussianRational,
    v: &[GaussianRational],
) -> ExactVector {
    u.iter().zip(v).map(|(x, y)| a * x + b * y).collect()
}

pub fn unit_vector(n: usize, k: usize) -> ExactVector {
    let mut v = vec![GaussianRational::default(); n];
    v[k] = num_traits::One::one();
    v
}

pub fn is_zero_vec(v: &[GaussianRational]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}
