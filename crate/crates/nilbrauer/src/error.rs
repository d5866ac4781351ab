use thiserror::Error;

/// Errors raised by the nil-Brauer engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NbError {
    #[error("strand mismatch: expected {expected} strands, found {found}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("invalid slice {index}: {reason}")]
    InvalidSlice { index: usize, reason: String },
    #[error("resource bound exceeded in slot (m={m}, n={n}, d={d}): {what}")]
    BoundExceeded {
        m: usize,
        n: usize,
        d: i64,
        what: String,
    },
    #[error("unsupported element {name} with n={n}, r={r}")]
    Unsupported { name: String, n: usize, r: usize },
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
}
