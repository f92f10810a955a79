use thiserror::Error;

/// Errors shared by the word, permutation and equivalence layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    /// A parse failure; `position` is a byte offset into the input.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// A generator index that does not exist on this strand count.
    #[error("generator index {index} out of range: B{strands} has generators s0..s{}", strands.saturating_sub(2))]
    GeneratorOutOfRange { index: usize, strands: usize },

    /// A strand (position) index that does not exist on this strand count.
    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },

    /// Two objects that must live on the same strand count do not.
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    /// An operation that requires at least one strand got zero.
    #[error("a braid needs at least one strand")]
    NoStrands,

    /// Handle reduction gave up after the configured number of steps.
    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: usize },

    /// An endpoint set that is not strictly increasing or has the wrong size.
    #[error("invalid endpoint set: {0}")]
    InvalidEndpoints(String),

    /// A relabeling map that is not strictly increasing.
    #[error("relabeling map must be strictly increasing: {0}")]
    NonMonotoneRelabel(String),

    /// An operation that requires a pure braid got a non-pure one.
    #[error("expected a pure braid: {0}")]
    NotPure(String),

    /// A bug: an internal invariant failed to hold.
    #[error("internal error: {0}")]
    Internal(String),
}

impl BraidError {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        BraidError::Syntax {
            position,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        BraidError::Internal(message.into())
    }
}
