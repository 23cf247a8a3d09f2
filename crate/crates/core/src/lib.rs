//! Exact computation of Lie-algebra cohomology and of the cohomology attached
//! to left-invariant involutive structures on Lie groups.
//!
//! Scalars live in the Gaussian rationals Q(i), so every dimension reported by
//! the cohomology, Hodge and classification code is an exact rank.

pub mod algebra;
pub mod bigraded;
pub mod cecomplex;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod hodge;
pub mod levi_roots;
pub mod reports;
pub mod torus_solver;

pub use error::{Error, Result};
