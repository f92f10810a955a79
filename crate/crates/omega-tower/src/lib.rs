//! Braids on infinitely many strands, computed through their finite
//! restrictions.
//!
//! An infinite braid is knowable only through the braids it restricts to on
//! finitely many strands, and two infinite braids are equal exactly when
//! all their finite restrictions are.  [`OmegaBraidTower`] takes that as
//! the definition: a lazily-materialized, memoized family `level(m)` of
//! [`braid_core::GeneralizedBraid`]s tied together by top-strand deletion.
//! Everything answerable about such a tower is answered up to an explicit
//! horizon — validation ([`validate_coherence`], [`validate_surjectivity`]),
//! bounded equivalence ([`towers_equivalent`]), group structure
//! ([`tower_compose`], [`tower_inverse`]), the torsion harness
//! ([`torsion_check`]), and the projection of a pure braid onto its
//! abelianization class ([`abelianization_push`]).

pub mod error;
pub mod file;
pub mod ops;
pub mod tower;
pub mod validate;

pub use error::TowerError;
pub use file::{explicit_snapshot, parse_tower, print_tower};
pub use ops::{abelianization_push, torsion_check, torsion_witness_level, tower_compose, tower_inverse};
pub use tower::{OmegaBraidTower, DEFAULT_HORIZON};
pub use validate::{
    towers_equivalent, towers_first_difference, validate_coherence, validate_surjectivity,
    CoherenceFailure, CoherenceReport,
};
