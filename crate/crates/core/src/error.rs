use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("matrix dimension {size} exceeds the symbolic cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear space is not regular (contains no invertible matrix)")]
    NonRegular,
    #[error("singular pencil: det(xA + yB) vanishes identically")]
    SingularPencil,
    #[error("pencil has an irrational eigenvalue")]
    IrrationalEigenvalue,
    #[error("computation inconclusive: {0}")]
    Inconclusive(String),
    #[error("value does not reduce modulo {0}")]
    BadReduction(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
