use thiserror::Error;

/// Errors raised by the engine. Cohomology computations themselves are total;
/// errors come from malformed inputs or violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot parse Gaussian rational {0:?}")]
    ParseScalar(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("unknown builtin algebra {0:?}")]
    UnknownBuiltin(String),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(String, String, String),

    #[error("spanning vectors are linearly dependent")]
    NotIndependent,

    #[error("span is not closed under the bracket: [v{0}, v{1}] leaves the span")]
    NotClosed(usize, usize),

    #[error("interior product of a degree-0 cochain")]
    DegreeZero,

    #[error("covector does not annihilate the subalgebra and its conjugate")]
    NotCharacteristic,

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("operator composition is not zero")]
    CompositionNonZero,

    #[error("torus vectors {0} and {1} do not commute")]
    NonCommutingTorus(usize, usize),

    #[error("adjoint action of torus vector {0} has eigenvalues outside Q(i) or is not diagonalizable")]
    EigenvaluesOutsideField(usize),

    #[error("invalid structure parameters: {0}")]
    InvalidParameters(String),

    #[error("subalgebra has no characteristic covectors (elliptic structure)")]
    EmptyCharacteristic,
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
