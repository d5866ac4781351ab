use thiserror::Error;

/// Errors raised while building or enumerating chord diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("position {0} is outside 1..={1}")]
    PositionOutOfRange(usize, usize),
    #[error("position {0} is used twice")]
    PositionReused(usize),
    #[error("position {0} is neither tethered nor matched")]
    PositionUnused(usize),
    #[error("{points} points exceed the enumeration bound {max}")]
    SizeExceeded { points: usize, max: usize },
}
