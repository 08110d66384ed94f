use thiserror::Error;

/// Errors produced by the geometric primitives and the estimators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {dim}: {reason}")]
    UnsupportedDimension { dim: usize, reason: &'static str },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("input violates general position: {0}")]
    GeneralPosition(String),

    #[error("empty input")]
    EmptyInput,

    #[error("{what} needs at least {needed} points, got {got}")]
    TooFewPoints { what: &'static str, needed: usize, got: usize },

    #[error("enumeration over {n} points exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("non-finite coordinate {value} at position {position}")]
    NonFinite { position: usize, value: f64 },

    #[error("point {index}: existence probability {prob} is outside (0, 1]")]
    InvalidProbability { index: usize, prob: f64 },

    #[error("point {index} duplicates point {other}")]
    DuplicatePoint { index: usize, other: usize },

    #[error("point {index}: {reason}")]
    InvalidPoint { index: usize, reason: String },

    #[error("index {index} out of range for {len} points")]
    InvalidIndex { index: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
