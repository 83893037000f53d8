use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid label {input:?}: {reason}")]
    Format { input: String, reason: String },

    #[error("dimension {dim} outside supported range {min}..={max}")]
    Dimension { dim: u32, min: u32, max: u32 },

    #[error("value {value} does not fit in {dim} bits")]
    LabelRange { dim: u32, value: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(String, String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("paths overlap at node {0}")]
    Overlap(String),

    #[error("cannot join paths: {0} is not adjacent to {1}")]
    Junction(String, String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
