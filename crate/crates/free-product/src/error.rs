use braid_core::BraidError;
use omega_tower::TowerError;
use thiserror::Error;

/// Errors from free-word parsing, the Artin action, and automorphism
/// plumbing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    /// A parse failure; `position` is a byte offset into the input.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// A free-word generator index outside the allowed range.
    #[error("generator d{index} out of range: {context}")]
    IndexOutOfRange { index: usize, context: String },

    /// A caller-side precondition violation (mismatched domains, endpoint
    /// sets not nested, non-standard endpoints where standard are needed).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Conjugate-of-generator extraction failed where it must succeed
    /// (braid actions always have that shape), so this signals a bug.
    #[error("internal error: conjugator extraction failed: {0}")]
    Extraction(String),

    /// Dagger file syntax error.
    #[error("dagger file, line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Braid(#[from] BraidError),

    #[error(transparent)]
    Tower(#[from] TowerError),
}

impl AutError {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        AutError::Syntax {
            position,
            message: message.into(),
        }
    }
}
