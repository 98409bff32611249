use thiserror::Error;

/// Errors raised by parsing, generation and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    /// `position` is 1-based.
    #[error("restricted-growth violation at position {position}")]
    RestrictedGrowth { position: usize },

    #[error("unknown step character {ch:?} at position {position}")]
    UnknownStep { ch: char, position: usize },

    #[error("path goes below the x-axis at step {position}")]
    NegativeHeight { position: usize },

    #[error("path ends at height {height}, expected 0")]
    NonzeroFinalHeight { height: i64 },

    #[error("skew step at position {position} overlaps a previously traced segment")]
    SkewOverlap { position: usize },

    #[error("skew step at position {position} leaves the first quadrant")]
    SkewOutOfQuadrant { position: usize },

    #[error("path is not in class {class}: {reason}")]
    ClassViolation { class: &'static str, reason: String },

    #[error("partition contains pattern {pattern} at positions {positions:?}")]
    PatternFound { pattern: String, positions: Vec<usize> },

    #[error("empty partition has no image under the bijections")]
    EmptyPartition,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("size {n} exceeds the exhaustive limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
