use braid_core::BraidError;
use thiserror::Error;

/// Errors from tower construction, materialization, and file handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    /// A word- or braid-level failure bubbled up from a level computation.
    #[error(transparent)]
    Braid(#[from] BraidError),

    /// The tower cannot produce this level (e.g. an explicit tower that
    /// only stores finitely many).
    #[error("level {level} is not available (tower provides levels up to {available})")]
    LevelUnavailable { level: usize, available: usize },

    /// Levels must be indexed from 1 upward.
    #[error("tower levels start at 1")]
    LevelZero,

    /// A composition or inverse was requested outside the supported regime
    /// (left factor pure with standard endpoints, or both sides finitely
    /// supported).
    #[error("unsupported tower operation: {0}")]
    UnsupportedRegime(String),

    /// An operation that requires coherent towers received one that fails
    /// validation.
    #[error("incoherent tower: {0}")]
    Incoherent(String),

    /// Tower file syntax error.
    #[error("tower file, line {line}: {message}")]
    Parse { line: usize, message: String },
}
