use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use braid_core::{BraidWord, GeneralizedBraid, Letter};

use crate::error::TowerError;

/// An infinite braid, represented by what is actually computable about it:
/// the family of its finite restrictions `level(m)` for `m >= 1`.
///
/// Levels are produced lazily from a rule and memoized, so genuinely
/// infinite examples (every strand winding around strand zero, say) are
/// first-class values; every question asked of a tower is bounded by an
/// explicit horizon and answered from finitely many levels.
///
/// A *coherent* tower satisfies, up to the horizon under discussion:
/// `level(m)` has `m` strands, the endpoint label sets are nested, and
/// deleting the top strand of `level(m+1)` yields a braid equivalent to
/// `level(m)`.  Coherence is a property checked by
/// [`crate::validate::validate_coherence`], not an invariant of the type:
/// deliberately broken towers are representable so that validation has
/// something to find.
#[derive(Clone)]
pub struct OmegaBraidTower {
    rule: Arc<Rule>,
    cache: Arc<Mutex<HashMap<usize, GeneralizedBraid>>>,
    declared_horizon: usize,
}

pub(crate) enum Rule {
    /// Finitely many stored levels, keyed by `m`.
    Explicit(BTreeMap<usize, GeneralizedBraid>),
    /// A finite braid padded with straight strands above, restricted by
    /// top-strand deletion below.
    FinitelySupported(BraidWord),
    /// At level `m`, strands `1..m` each wind once around strand `0`.
    Winding,
    /// The identity at every level.
    Identity,
    /// Levelwise concatenation; requires the left level to be pure with
    /// standard endpoints at materialization time.
    Compose(OmegaBraidTower, OmegaBraidTower),
    /// Levelwise inverse; same purity requirement.
    Inverse(OmegaBraidTower),
}

/// Default materialization bound used when none is given.
pub const DEFAULT_HORIZON: usize = 8;

impl OmegaBraidTower {
    fn from_rule(rule: Rule, declared_horizon: usize) -> Self {
        OmegaBraidTower {
            rule: Arc::new(rule),
            cache: Arc::new(Mutex::new(HashMap::new())),
            declared_horizon,
        }
    }

    /// The tower of `f` padded with straight strands: above `f.strands()`
    /// the levels are `f` with extra idle strands and endpoints `{0..m-1}`;
    /// below, repeated top-strand deletion.
    pub fn finitely_supported(f: BraidWord) -> Self {
        Self::from_rule(Rule::FinitelySupported(f), DEFAULT_HORIZON)
    }

    /// The identity at every level.
    pub fn identity() -> Self {
        Self::from_rule(Rule::Identity, DEFAULT_HORIZON)
    }

    /// The winding tower: at level `m`, each strand `k >= 1` carries one
    /// full wind around strand `0` (the block `s_{k-1}..s_1 s_0^2
    /// s_1^-1..s_{k-1}^-1`), so no finite braid supports it.
    pub fn winding() -> Self {
        Self::from_rule(Rule::Winding, DEFAULT_HORIZON)
    }

    /// A tower from stored levels, e.g. parsed from a file.  The data is
    /// taken as-is; validation decides whether it is coherent.
    pub fn explicit(levels: Vec<(usize, GeneralizedBraid)>) -> Result<Self, TowerError> {
        let mut map = BTreeMap::new();
        let horizon = levels.iter().map(|(m, _)| *m).max().unwrap_or(0);
        for (m, level) in levels {
            if m == 0 {
                return Err(TowerError::LevelZero);
            }
            if map.insert(m, level).is_some() {
                return Err(TowerError::Parse {
                    line: 0,
                    message: format!("level {m} given twice"),
                });
            }
        }
        Ok(Self::from_rule(Rule::Explicit(map), horizon))
    }

    pub(crate) fn compose_rule(s: OmegaBraidTower, t: OmegaBraidTower) -> Self {
        let horizon = s.declared_horizon.max(t.declared_horizon);
        Self::from_rule(Rule::Compose(s, t), horizon)
    }

    pub(crate) fn inverse_rule(t: OmegaBraidTower) -> Self {
        let horizon = t.declared_horizon;
        Self::from_rule(Rule::Inverse(t), horizon)
    }

    pub(crate) fn rule(&self) -> &Rule {
        &self.rule
    }

    /// The horizon the tower was declared with (file header or default);
    /// purely advisory except for explicit towers, where it is also the
    /// largest stored level.
    pub fn declared_horizon(&self) -> usize {
        self.declared_horizon
    }

    pub fn with_declared_horizon(mut self, horizon: usize) -> Self {
        self.declared_horizon = horizon;
        self
    }

    /// A short label for the construction, used in file headers.
    pub fn kind_name(&self) -> &'static str {
        match *self.rule {
            Rule::Explicit(_) => "explicit",
            Rule::FinitelySupported(_) => "finsupp",
            Rule::Winding => "rule:winding",
            Rule::Identity => "rule:identity",
            Rule::Compose(..) | Rule::Inverse(_) => "derived",
        }
    }

    /// Materializes the `m`-th restriction (`m >= 1`).  Results are
    /// memoized, so concurrent and repeated requests return the identical
    /// value.
    pub fn level(&self, m: usize) -> Result<GeneralizedBraid, TowerError> {
        if m == 0 {
            return Err(TowerError::LevelZero);
        }
        if let Some(hit) = self.cache.lock().expect("tower cache poisoned").get(&m) {
            return Ok(hit.clone());
        }
        let computed = self.compute_level(m)?;
        self.cache
            .lock()
            .expect("tower cache poisoned")
            .insert(m, computed.clone());
        Ok(computed)
    }

    fn compute_level(&self, m: usize) -> Result<GeneralizedBraid, TowerError> {
        match &*self.rule {
            Rule::Explicit(map) => map.get(&m).cloned().ok_or(TowerError::LevelUnavailable {
                level: m,
                available: map.keys().max().copied().unwrap_or(0),
            }),
            Rule::FinitelySupported(f) => Ok(finsupp_level(f, m)),
            Rule::Winding => Ok(GeneralizedBraid::from_word(winding_word(m))),
            Rule::Identity => Ok(GeneralizedBraid::from_word(
                BraidWord::identity(m).expect("m >= 1"),
            )),
            Rule::Compose(s, t) => {
                let left = s.level(m)?;
                let right = t.level(m)?;
                if !left.is_pure_standard() {
                    return Err(TowerError::UnsupportedRegime(format!(
                        "compose: left tower is not pure with standard endpoints at level {m}"
                    )));
                }
                let word = left
                    .word()
                    .compose(right.word())
                    .map_err(TowerError::Braid)?;
                GeneralizedBraid::new(word, right.endpoints().to_vec())
                    .map_err(TowerError::Braid)
            }
            Rule::Inverse(t) => {
                let inner = t.level(m)?;
                if !inner.is_pure_standard() {
                    return Err(TowerError::UnsupportedRegime(format!(
                        "inverse: tower is not pure with standard endpoints at level {m}"
                    )));
                }
                Ok(GeneralizedBraid::from_word(inner.word().inverse()))
            }
        }
    }
}

/// Level `m` of the finitely-supported tower of `f`.
fn finsupp_level(f: &BraidWord, m: usize) -> GeneralizedBraid {
    let n = f.strands();
    if m >= n {
        let padded = BraidWord::new(m, f.letters().to_vec())
            .expect("letter indices < n-1 <= m-1");
        GeneralizedBraid::from_word(padded)
    } else {
        let mut cur = GeneralizedBraid::from_word(f.clone());
        while cur.strands() > m {
            let top = cur.strands() - 1;
            cur = cur
                .delete_strand(top)
                .expect("top strand always exists while strands > 1");
        }
        cur
    }
}

/// The level-`m` word of the winding tower: the product over `k = 1..m-1`
/// of one wind of strand `k` around strand `0`.
fn winding_word(m: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in 1..m {
        // Bring strand k down to position 1, wind (s0^2), bring it back.
        for i in (1..k).rev() {
            letters.push(Letter::positive(i));
        }
        letters.push(Letter::positive(0));
        letters.push(Letter::positive(0));
        for i in 1..k {
            letters.push(Letter::negative(i));
        }
    }
    BraidWord::new(m, letters).expect("indices < m-1 by construction")
}
