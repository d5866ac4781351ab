use thiserror::Error;

/// Errors raised by coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("argument must be non-negative, got {0}")]
    NegativeArgument(i64),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
