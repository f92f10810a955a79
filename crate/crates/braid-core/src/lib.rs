//! Finite braid groups as words in the Artin generators, with a decidable
//! equivalence engine.
//!
//! A braid on `n` strands is stored as a [`BraidWord`]: a sequence of signed
//! letters `s0 .. s{n-2}`, where `s{i}` crosses the strands at positions `i`
//! and `i+1` (positively: the strand at `i` passes over, moving
//! counterclockwise).  Group structure is concatenation and reversal;
//! equality of braids is decided two independent ways;
//!
//! * [`handle::handle_reduce`] — handle reduction, which rewrites a word to
//!   a handle-free form that is empty exactly for the identity;
//! * [`garside::NormalForm`] — the left-greedy canonical form
//!   `delta^p f_1 .. f_k`, identical for two words exactly when they are the
//!   same braid.
//!
//! Each engine checks the other in the test suites.  On top of the plain
//! words sit [`Permutation`] (the strand-position homomorphism) and
//! [`GeneralizedBraid`] (braids whose endpoint labels are an arbitrary
//! finite set of naturals, as arise when strands are deleted from bigger
//! braids).

pub mod error;
pub mod garside;
pub mod generalized;
pub mod handle;
pub mod perm;
pub mod random;
pub mod word;

pub use error::BraidError;
pub use garside::{half_twist_word, normal_form, positive_word_of, NormalForm};
pub use generalized::GeneralizedBraid;
pub use handle::{equivalent, handle_reduce, is_trivial, DEFAULT_HANDLE_BUDGET};
pub use perm::Permutation;
pub use word::{BraidWord, Letter, Sign};
