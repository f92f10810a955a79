//! Independent referees for the word-problem engines, kept out of the
//! public library surface: everything here is meant to be consumed as a
//! dev-dependency by test suites.
//!
//! The centerpiece is the Lawrence-Krammer matrix action ([`lk`]), a
//! faithful linear representation computed over exact two-variable Laurent
//! polynomials ([`laurent`]).  It shares no code with handle reduction or
//! the Garside normal form, so agreement between all three on triviality is
//! meaningful evidence, not an echo.

pub mod laurent;
pub mod lk;

pub use laurent::Laurent;
pub use lk::{action_columns, apply_word, is_identity_action, same_action};
