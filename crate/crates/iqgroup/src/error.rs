use thiserror::Error;

/// Errors raised by operations on the iquantum group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IqError {
    #[error("parity t must be 0 or 1, got {0}")]
    InvalidParity(i64),
    #[error("elements have different parities {0} and {1}")]
    ParityMismatch(u8, u8),
    #[error("unknown basis {0:?}; expected B, PBW or P")]
    UnknownBasis(String),
    #[error("cannot parse element {0:?}: {1}")]
    Parse(String, String),
}
