use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tolerance space needs at least one point")]
    EmptyUniverse,
    #[error("universe of {size} points exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("point index {index} out of range for a universe of {size} points")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation is not symmetric: ({0}, {1}) present without ({1}, {0})")]
    Asymmetric(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("{what} has {size} elements, above the cap of {max}")]
    CapExceeded { what: &'static str, size: usize, max: usize },
    #[error("block collection refers to block {index} of a family with {len} blocks")]
    FamilyMismatch { index: usize, len: usize },
    #[error("choice over an empty family of collections")]
    EmptyChoice,
    #[error("unknown claim tag {0:?}")]
    UnknownClaim(String),
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
    #[error("replay witness mismatch: {0}")]
    InvalidReplay(String),
}
