use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is not invertible (standard part is zero)")]
    NotInvertible,
    #[error("square root of a negative dual number")]
    NegativeArgument,
    #[error("square root of a nonzero infinitesimal is not a dual number")]
    NotRepresentable,
    #[error("operation requires an appreciable argument")]
    NotAppreciable,
    #[error("non-finite component")]
    NonFinite,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("interval bounds out of order")]
    InvalidInterval,
}
