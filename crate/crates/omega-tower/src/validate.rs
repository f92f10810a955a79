use std::collections::BTreeSet;
use std::fmt;

use crate::error::TowerError;
use crate::tower::OmegaBraidTower;

/// Outcome of checking a tower's structural conditions up to a horizon.
/// An empty failure list means every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    pub horizon: usize,
    pub failures: Vec<CoherenceFailure>,
}

/// One violated condition at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceFailure {
    /// The lower level `m` of the pair `(m, m+1)` the condition concerns,
    /// or the level itself for per-level conditions.
    pub level: usize,
    pub condition: String,
}

impl CoherenceReport {
    pub fn is_coherent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_coherent() {
            write!(f, "coherent up to level {}", self.horizon)
        } else {
            writeln!(f, "incoherent (checked up to level {}):", self.horizon)?;
            for failure in &self.failures {
                writeln!(f, "  level {}: {}", failure.level, failure.condition)?;
            }
            Ok(())
        }
    }
}

/// Checks, for all levels up to `horizon`: each level has the right strand
/// count, endpoint sets are nested, and deleting the top strand of level
/// `m+1` gives a braid equivalent to level `m`.  Violations (including
/// levels that fail to materialize) are collected, not thrown.
pub fn validate_coherence(tower: &OmegaBraidTower, horizon: usize) -> CoherenceReport {
    let mut failures = Vec::new();
    let mut levels = Vec::with_capacity(horizon);
    for m in 1..=horizon {
        match tower.level(m) {
            Ok(level) => {
                if level.strands() != m {
                    failures.push(CoherenceFailure {
                        level: m,
                        condition: format!(
                            "cardinality: level {m} has {} strands",
                            level.strands()
                        ),
                    });
                    levels.push(None);
                } else {
                    levels.push(Some(level));
                }
            }
            Err(e) => {
                failures.push(CoherenceFailure {
                    level: m,
                    condition: format!("level unavailable: {e}"),
                });
                levels.push(None);
            }
        }
    }

    for m in 1..horizon {
        let (Some(lo), Some(hi)) = (&levels[m - 1], &levels[m]) else {
            continue;
        };
        let lo_set: BTreeSet<usize> = lo.endpoints().iter().copied().collect();
        let hi_set: BTreeSet<usize> = hi.endpoints().iter().copied().collect();
        if !lo_set.is_subset(&hi_set) {
            failures.push(CoherenceFailure {
                level: m,
                condition: format!(
                    "endpoint nesting: E_{m} = {:?} is not contained in E_{} = {:?}",
                    lo.endpoints(),
                    m + 1,
                    hi.endpoints()
                ),
            });
        }
        match hi.delete_strand(m) {
            Ok(deleted) => match deleted.equivalent(lo) {
                Ok(true) => {}
                Ok(false) => failures.push(CoherenceFailure {
                    level: m,
                    condition: format!(
                        "deletion mismatch: level {} restricted is {}, but level {m} is {}",
                        m + 1,
                        deleted,
                        lo
                    ),
                }),
                Err(e) => failures.push(CoherenceFailure {
                    level: m,
                    condition: format!("deletion check failed: {e}"),
                }),
            },
            Err(e) => failures.push(CoherenceFailure {
                level: m,
                condition: format!("cannot delete top strand of level {}: {e}", m + 1),
            }),
        }
    }
    failures.sort_by_key(|f| f.level);

    CoherenceReport { horizon, failures }
}

/// The union of all endpoint labels seen up to `horizon` — the bounded
/// evidence for surjectivity.  Full surjectivity is only semi-decidable;
/// the caller compares this against the lower set it expects.
pub fn validate_surjectivity(
    tower: &OmegaBraidTower,
    horizon: usize,
) -> Result<BTreeSet<usize>, TowerError> {
    let mut seen = BTreeSet::new();
    for m in 1..=horizon {
        seen.extend(tower.level(m)?.endpoints().iter().copied());
    }
    Ok(seen)
}

/// The first level `<= horizon` at which the towers differ (unequal
/// endpoint sets or inequivalent words), or `None` if they agree on every
/// level up to the horizon.  Both towers must be coherent up to the
/// horizon.
pub fn towers_first_difference(
    s: &OmegaBraidTower,
    t: &OmegaBraidTower,
    horizon: usize,
) -> Result<Option<usize>, TowerError> {
    for (name, tower) in [("left", s), ("right", t)] {
        let report = validate_coherence(tower, horizon);
        if !report.is_coherent() {
            return Err(TowerError::Incoherent(format!(
                "{name} tower fails validation: {}",
                report
                    .failures
                    .first()
                    .map(|f| format!("level {}: {}", f.level, f.condition))
                    .unwrap_or_default()
            )));
        }
    }
    for m in 1..=horizon {
        if !s.level(m)?.equivalent(&t.level(m)?)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Bounded tower equivalence: exact refutation, horizon-limited
/// confirmation (the infinite statement needs every level).
pub fn towers_equivalent(
    s: &OmegaBraidTower,
    t: &OmegaBraidTower,
    horizon: usize,
) -> Result<bool, TowerError> {
    Ok(towers_first_difference(s, t, horizon)?.is_none())
}
