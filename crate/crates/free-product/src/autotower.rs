use std::collections::BTreeSet;
use std::fmt;

use omega_tower::OmegaBraidTower;

use crate::dagger::{check_dagger, induced_level_map, DaggerAutomorphism};
use crate::error::AutError;
use crate::freeword::FreeWord;

/// The outcome of [`check_diagram`]: empty failure list means the square
/// commutes on every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub failures: Vec<String>,
}

impl DiagramReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "diagram commutes");
        }
        for (k, failure) in self.failures.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Checks that projection commutes with a pair of level maps: for every
/// domain generator `d<i>` of the bigger map, projecting its image to the
/// smaller endpoint set must equal the smaller map's value on the
/// projected generator (the image of `d<i>` when `i` is still in the
/// smaller domain, the empty word once `i` is truncated away).
///
/// Preconditions: the smaller domain is at most the bigger one and the
/// smaller endpoint set is contained in the bigger one.
pub fn check_diagram(
    big: &DaggerAutomorphism,
    small: &DaggerAutomorphism,
) -> Result<DiagramReport, AutError> {
    if small.size() > big.size() {
        return Err(AutError::Precondition(format!(
            "the second map (on {} generators) must not be bigger than the first (on {})",
            small.size(),
            big.size()
        )));
    }
    let big_set: BTreeSet<usize> = big.endpoints().iter().copied().collect();
    let small_set: BTreeSet<usize> = small.endpoints().iter().copied().collect();
    if !small_set.is_subset(&big_set) {
        return Err(AutError::Precondition(format!(
            "endpoint sets are not nested: {:?} is not contained in {:?}",
            small.endpoints(),
            big.endpoints()
        )));
    }

    let mut failures = Vec::new();
    for i in 0..big.size() {
        let projected = big.image(i).project(&small_set);
        let expected = if i < small.size() {
            small.image(i).clone()
        } else {
            FreeWord::identity()
        };
        if projected != expected {
            failures.push(format!(
                "generator d{i}: projecting the level-{} image gives {projected}, the level-{} map gives {expected}",
                big.size(),
                small.size()
            ));
        }
    }
    Ok(DiagramReport { failures })
}

/// The family of level maps induced by an infinite braid's restrictions,
/// one per level up to a horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismTower {
    levels: Vec<DaggerAutomorphism>,
}

impl AutomorphismTower {
    /// Induces the level map of every tower level from 1 to `horizon`.
    pub fn from_braid_tower(
        tower: &OmegaBraidTower,
        horizon: usize,
    ) -> Result<Self, AutError> {
        if horizon == 0 {
            return Err(AutError::Precondition(
                "the horizon must be at least 1".into(),
            ));
        }
        let mut levels = Vec::with_capacity(horizon);
        for m in 1..=horizon {
            levels.push(induced_level_map(&tower.level(m)?)?);
        }
        Ok(AutomorphismTower { levels })
    }

    pub fn horizon(&self) -> usize {
        self.levels.len()
    }

    /// The level map at `m` (levels are 1-based).
    pub fn level(&self, m: usize) -> Option<&DaggerAutomorphism> {
        m.checked_sub(1).and_then(|k| self.levels.get(k))
    }

    /// Runs [`check_dagger`] at every level and [`check_diagram`] on every
    /// adjacent pair, collecting all failures with their levels.
    pub fn validate(&self) -> Result<Vec<String>, AutError> {
        let mut failures = Vec::new();
        for (k, map) in self.levels.iter().enumerate() {
            let report = check_dagger(map);
            for failure in report.failures {
                failures.push(format!("level {}: {failure}", k + 1));
            }
        }
        for pair in self.levels.windows(2) {
            let report = check_diagram(&pair[1], &pair[0])?;
            for failure in report.failures {
                failures.push(format!(
                    "levels {} and {}: {failure}",
                    pair[1].size(),
                    pair[0].size()
                ));
            }
        }
        Ok(failures)
    }
}
