//! Braids acting on free products of infinite cyclic groups.
//!
//! A braid on `n` strands permutes `n` marked points of the disc, and on
//! the fundamental group of the punctured disc — the free product of one
//! infinite cyclic group `⟨d_i⟩` per puncture — it acts by the classical
//! substitution automorphisms ([`artin_action`]).  Every braid image has a
//! distinctive shape: each generator maps to a conjugate of a single
//! generator, and the ordered product of all generators is preserved.
//! [`DaggerAutomorphism`] captures maps of that shape,
//! [`induced_level_map`] produces them from braids, [`check_dagger`]
//! verifies the shape (with invertibility certified by Stallings folding),
//! and [`reconstruct_braid`] inverts the construction by bounded breadth-
//! first search, recovering a braid word from its action.
//!
//! Infinite braids enter through their finite restrictions:
//! [`AutomorphismTower`] induces one level map per restriction and
//! [`check_diagram`] verifies that truncation projections commute with
//! the level maps.

pub mod artin;
pub mod autotower;
pub mod dagger;
pub mod error;
pub mod file;
pub mod freeword;
pub mod reconstruct;
pub mod stallings;

pub use artin::artin_action;
pub use autotower::{check_diagram, AutomorphismTower, DiagramReport};
pub use dagger::{
    check_dagger, induced_level_map, ConjugatorData, DaggerAutomorphism, DaggerReport,
};
pub use error::AutError;
pub use file::{parse_dagger, print_dagger};
pub use freeword::{FreeLetter, FreeWord};
pub use reconstruct::reconstruct_braid;
pub use stallings::generates_whole_group;
