use braid_core::{handle, BraidError, BraidWord, Letter, Sign};

use crate::error::TowerError;
use crate::tower::{OmegaBraidTower, Rule};

/// Levelwise composition `s` then `t`.
///
/// Supported regimes: both towers finitely supported (composed eagerly at a
/// common strand count), or `s` pure with standard endpoints — then the
/// levelwise concatenation is again a coherent tower, with endpoints taken
/// from `t`.  Outside these regimes the infinite relabeling needed by the
/// group law is not levelwise-computable; the returned tower reports the
/// violation when a level is materialized.
pub fn tower_compose(s: &OmegaBraidTower, t: &OmegaBraidTower) -> OmegaBraidTower {
    if let (Rule::FinitelySupported(f), Rule::FinitelySupported(g)) = (s.rule(), t.rule()) {
        let n = f.strands().max(g.strands());
        let pad = |word: &BraidWord| {
            BraidWord::new(n, word.letters().to_vec()).expect("padding only adds strands")
        };
        let composed = pad(f).compose(&pad(g)).expect("equal strand counts");
        return OmegaBraidTower::finitely_supported(composed)
            .with_declared_horizon(s.declared_horizon().max(t.declared_horizon()));
    }
    OmegaBraidTower::compose_rule(s.clone(), t.clone())
}

/// Levelwise inverse.  Finitely-supported towers invert their generating
/// word; other towers must be pure with standard endpoints, checked at
/// materialization.
pub fn tower_inverse(t: &OmegaBraidTower) -> OmegaBraidTower {
    if let Rule::FinitelySupported(f) = t.rule() {
        return OmegaBraidTower::finitely_supported(f.inverse())
            .with_declared_horizon(t.declared_horizon());
    }
    OmegaBraidTower::inverse_rule(t.clone())
}

/// The first level `<= horizon` at which the `exponent`-th power of the
/// level word is a nontrivial braid, or `None` if every power is trivial up
/// to the horizon.  Requires a pure tower (standard endpoints, identity
/// matching) so that powers are meaningful levelwise.
pub fn torsion_witness_level(
    t: &OmegaBraidTower,
    exponent: i64,
    horizon: usize,
) -> Result<Option<usize>, TowerError> {
    if exponent < 2 {
        return Err(TowerError::UnsupportedRegime(format!(
            "torsion check needs exponent >= 2, got {exponent}"
        )));
    }
    for m in 1..=horizon {
        let level = t.level(m)?;
        if !level.is_pure_standard() {
            return Err(TowerError::UnsupportedRegime(format!(
                "torsion check needs a pure tower; level {m} is not pure with standard endpoints"
            )));
        }
        let power = level.word().power(exponent);
        if !handle::is_trivial(&power).map_err(TowerError::Braid)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Whether the `exponent`-th levelwise power is trivial at every level up
/// to the horizon.  For any nontrivial pure tower this comes back `false`
/// at some finite level — the bounded shadow of torsion-freeness.
pub fn torsion_check(
    t: &OmegaBraidTower,
    exponent: i64,
    horizon: usize,
) -> Result<bool, TowerError> {
    Ok(torsion_witness_level(t, exponent, horizon)?.is_none())
}

/// Replaces a pure braid word by the canonical representative of its
/// abelianization class supported on the last two strands:
/// `s_{n-2}^{2k}` with `2k` the exponent sum.  Pure words always have even
/// exponent sum, so an odd sum can only mean a bug in the caller's purity
/// reasoning and is reported as an internal error.
pub fn abelianization_push(f: &BraidWord) -> Result<BraidWord, BraidError> {
    if !f.is_pure() {
        return Err(BraidError::NotPure(format!(
            "abelianization push needs a trivial underlying permutation, got {}",
            f.underlying_permutation()
        )));
    }
    let sum = f.exponent_sum();
    if sum % 2 != 0 {
        return Err(BraidError::internal(format!(
            "pure word with odd exponent sum {sum}: purity and parity disagree"
        )));
    }
    let n = f.strands();
    if sum == 0 {
        return BraidWord::identity(n);
    }
    let sign = if sum > 0 { Sign::Positive } else { Sign::Negative };
    let letters = vec![
        Letter {
            index: n - 2,
            sign
        };
        sum.unsigned_abs() as usize
    ];
    BraidWord::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{towers_equivalent, validate_coherence};
    use braid_core::GeneralizedBraid;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn compose_with_inverse_is_the_identity_tower() {
        let t = OmegaBraidTower::finitely_supported(w("B3: s0 s1"));
        let product = tower_compose(&t, &tower_inverse(&t));
        assert!(towers_equivalent(&product, &OmegaBraidTower::identity(), 8).unwrap());
    }

    #[test]
    fn inverse_of_identity_is_identity() {
        let inv = tower_inverse(&OmegaBraidTower::identity());
        assert!(towers_equivalent(&inv, &OmegaBraidTower::identity(), 6).unwrap());
    }

    #[test]
    fn composing_winding_towers_doubles_exponent_sums() {
        let winding = OmegaBraidTower::winding();
        let doubled = tower_compose(&winding, &winding);
        for m in 1..=6 {
            assert_eq!(
                doubled.level(m).unwrap().word().exponent_sum(),
                2 * winding.level(m).unwrap().word().exponent_sum()
            );
        }
        assert!(validate_coherence(&doubled, 6).is_coherent());
    }

    #[test]
    fn composition_outside_the_regime_errors_at_materialization() {
        // Left tower is finitely supported but not pure (s0 swaps strands),
        // and the right one is a rule tower, so the lazy path is taken and
        // must refuse.
        let left = OmegaBraidTower::finitely_supported(w("B2: s0"));
        let product = tower_compose(&left, &OmegaBraidTower::winding());
        assert!(matches!(
            product.level(2),
            Err(TowerError::UnsupportedRegime(_))
        ));
    }

    #[test]
    fn winding_composition_is_coherent_and_lazy() {
        let winding = OmegaBraidTower::winding();
        let inv = tower_inverse(&winding);
        let product = tower_compose(&winding, &inv);
        for m in 1..=6 {
            let lv = product.level(m).unwrap();
            assert!(handle::is_trivial(lv.word()).unwrap(), "level {m}");
        }
    }

    #[test]
    fn torsion_detection_levels() {
        assert!(torsion_check(&OmegaBraidTower::identity(), 2, 6).unwrap());
        assert_eq!(
            torsion_witness_level(&OmegaBraidTower::winding(), 2, 6).unwrap(),
            Some(2)
        );
        let sq = OmegaBraidTower::finitely_supported(w("B2: s0 s0"));
        assert_eq!(torsion_witness_level(&sq, 3, 4).unwrap(), Some(2));
        assert!(!torsion_check(&sq, 3, 4).unwrap());
    }

    #[test]
    fn torsion_check_rejects_non_pure_towers() {
        let t = OmegaBraidTower::finitely_supported(w("B2: s0"));
        assert!(matches!(
            torsion_witness_level(&t, 2, 4),
            Err(TowerError::UnsupportedRegime(_))
        ));
    }

    #[test]
    fn push_examples() {
        assert_eq!(
            abelianization_push(&w("B2: s0 s0")).unwrap().to_string(),
            "B2: s0 s0"
        );
        assert_eq!(abelianization_push(&w("B3:")).unwrap().to_string(), "B3:");
        assert_eq!(
            abelianization_push(&w("B3: s0 s1 s1 s0^-1"))
                .unwrap()
                .to_string(),
            "B3: s1 s1"
        );
        // Negative winding pushes to negative letters.
        assert_eq!(
            abelianization_push(&w("B3: s0^-1 s0^-1")).unwrap().to_string(),
            "B3: s1^-1 s1^-1"
        );
        assert!(matches!(
            abelianization_push(&w("B3: s0")),
            Err(BraidError::NotPure(_))
        ));
    }

    #[test]
    fn push_preserves_class_on_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xAB);
        let mut count = 0;
        while count < 40 {
            let f = braid_core::random::random_word(&mut rng, 4, 8);
            if !f.is_pure() {
                continue;
            }
            count += 1;
            let pushed = abelianization_push(&f).unwrap();
            assert_eq!(pushed.exponent_sum(), f.exponent_sum());
            assert!(pushed.is_pure());
            assert!(pushed.letters().iter().all(|l| l.index == 2));
        }
    }

    #[test]
    fn exponent_bookkeeping_across_levels() {
        // The exponent sum lost when deleting the top strand is exactly the
        // exponent sum of the letters that strand participates in.
        for t in [
            OmegaBraidTower::winding(),
            OmegaBraidTower::finitely_supported(w("B4: s0 s2^-1 s1 s2")),
        ] {
            for m in 1..=6 {
                let up: GeneralizedBraid = t.level(m + 1).unwrap();
                let down = up.delete_strand(m).unwrap();
                let removed = up.word().exponent_sum() - down.word().exponent_sum();
                let level_diff = up.word().exponent_sum()
                    - t.level(m).unwrap().word().exponent_sum();
                assert_eq!(removed, level_diff, "level {m}");
            }
        }
    }
}
