use thiserror::Error;

use crate::lie::JacobiFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("skew matrix of odd dimension {0}")]
    OddDimension(usize),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("projection drops dimension from {expected} to {got}")]
    DegenerateProjection { expected: usize, got: usize },
    #[error("subspaces intersect nontrivially")]
    Overlap,
    #[error("subspace does not lie in the requested fiber")]
    NotInFiber,
    #[error("expected a subspace of dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("{0}")]
    Jacobi(JacobiFailure),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input-format and parameter errors, as opposed to violated mathematical
    /// preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidParameter(_) | Error::Unsupported(_) | Error::Shape(_)
        )
    }
}
