use thiserror::Error;

/// Errors raised by nil-Hecke computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NhError {
    #[error("elements live on different strand counts {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {0} is outside 1..{1}")]
    IndexOutOfRange(usize, usize),
    #[error("polynomial is not divisible by the root")]
    InexactDivision,
}
