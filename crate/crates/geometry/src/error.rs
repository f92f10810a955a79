use braid_core::BraidError;
use thiserror::Error;

use crate::point::{rat_string, Rat};

/// Errors from geometric construction, certification, and files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoError {
    /// A structural violation: times not strictly increasing, repeated
    /// start or end points, time range not `[0,1]`, and similar.
    #[error("invalid strand family: {0}")]
    InvalidBraid(String),

    /// The exact disjointness certificate failed; strands are indexed in
    /// family order and the time is where they touch.
    #[error("strands {first} and {second} touch at t={}", rat_string(.time))]
    StrandsTouch {
        first: usize,
        second: usize,
        time: Rat,
    },

    /// Point-set inputs whose sizes must agree.
    #[error("point sets have different sizes: {left} and {right}")]
    CardinalityMismatch { left: usize, right: usize },

    /// A malformed rational or point literal.
    #[error("bad rational or point literal `{0}`")]
    InvalidNumber(String),

    /// PL file syntax error.
    #[error("pl file, line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Braid(#[from] BraidError),

    /// A should-not-happen condition, reported rather than panicking.
    #[error("internal error: {0}")]
    Internal(String),
}
