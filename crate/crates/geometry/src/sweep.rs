//! Conversion between piecewise-linear strand families and braid words.
//!
//! `pl_to_word` sweeps time through a disjoint PL family, reading one
//! letter per transposition of the real-part order; `word_to_pl` realizes
//! a word geometrically, one crossing gadget per letter.  The two share
//! the crossing-sign convention: a positive letter means the left strand
//! passes in front, i.e. has the smaller imaginary part at the crossing.

use braid_core::{BraidWord, GeneralizedBraid, Letter, Sign};
use num::{BigInt, One, Signed, Zero};

use crate::error::GeoError;
use crate::pl::{PLBraid, Strand};
use crate::point::{Point, Rat};

/// One transposition of the real-part order during a sweep.
///
/// `position` is the left slot of the adjacent pair that swaps; `over`
/// and `under` are strand indices into the originating [`PLBraid`].
/// Within an event list, times are strictly increasing: simultaneous
/// crossings are retimed deterministically into the surrounding gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingEvent {
    pub time: Rat,
    pub position: usize,
    pub sign: Sign,
    pub over: usize,
    pub under: usize,
}

/// Sweeps the family and lists its crossings in time order.
///
/// The strand order at every checkpoint is the lexicographic order of
/// positions (real part, ties by imaginary part).  The tie-break acts as
/// an infinitesimal tilt, so any disjoint family — including strands that
/// share a real part over a whole interval, grazing contacts, and
/// simultaneous or triple crossings — yields a well-defined word.  The
/// only error is a failed disjointness certificate, which reports the
/// exact touch time.
pub fn crossing_events(pl: &PLBraid) -> Result<Vec<CrossingEvent>, GeoError> {
    pl.certify_disjoint()?;
    let events = event_times(pl);
    let checkpoints = checkpoint_times(&events);
    let orders: Vec<Vec<usize>> = checkpoints.iter().map(|t| lex_order(pl, t)).collect();

    let mut out = Vec::new();
    for k in 0..orders.len() - 1 {
        let tau = &events[k];
        let swaps = bubble_transpositions(&orders[k], &orders[k + 1]);
        let burst = swaps.len();
        for (j, (position, left, right)) in swaps.into_iter().enumerate() {
            let left_im = pl.strands()[left].position_at(tau).im;
            let right_im = pl.strands()[right].position_at(tau).im;
            debug_assert_ne!(left_im, right_im, "disjoint strands touch at {tau}");
            let (sign, over, under) = if left_im < right_im {
                (Sign::Positive, left, right)
            } else {
                (Sign::Negative, right, left)
            };
            let time = if burst == 1 {
                tau.clone()
            } else {
                // Spread the burst evenly across the checkpoint gap so
                // no two crossings share a time coordinate.
                let gap = &checkpoints[k + 1] - &checkpoints[k];
                &checkpoints[k] + gap * Rat::new(BigInt::from(j as i64 + 1), BigInt::from(burst as i64 + 1))
            };
            out.push(CrossingEvent {
                time,
                position,
                sign,
                over,
                under,
            });
        }
    }
    Ok(out)
}

/// Reads the braid word off a disjoint PL family.
///
/// Strands are numbered by the lexicographic order of their start points,
/// and the result is a braid over the standard endpoints `0..m-1`.
pub fn pl_to_word(pl: &PLBraid) -> Result<GeneralizedBraid, GeoError> {
    let events = crossing_events(pl)?;
    let mut word = BraidWord::identity(pl.size()).map_err(GeoError::from)?;
    for event in &events {
        let letter = match event.sign {
            Sign::Positive => Letter::positive(event.position),
            Sign::Negative => Letter::negative(event.position),
        };
        word.push(letter)?;
    }
    Ok(GeneralizedBraid::from_word(word))
}

/// Realizes a braid geometrically: one crossing gadget per letter.
///
/// Strand slots sit on the real axis at the (sorted) endpoint labels;
/// letter `k` of `L` owns the time slice `[k/L, (k+1)/L]`, within which
/// the two participating strands exchange slots through midpoints bumped
/// to imaginary part ∓1/4 — the front strand (smaller imaginary part) is
/// the left one exactly when the letter is positive.  All other strands
/// stay put, so the family is disjoint by construction; the certificate
/// is still run by the `PLBraid` constructor.
pub fn word_to_pl(braid: &GeneralizedBraid) -> Result<PLBraid, GeoError> {
    let m = braid.strands();
    let mut slots: Vec<Rat> = braid
        .endpoints()
        .iter()
        .map(|&label| Rat::from_integer(BigInt::from(label as i64)))
        .collect();
    slots.sort();

    let letters = braid.word().letters();
    let slices = letters.len().max(1) as i64;
    let quarter = Rat::new(BigInt::from(1), BigInt::from(4));

    let rest = |slot: &Rat| Point::new(slot.clone(), Rat::zero());
    let mut paths: Vec<Vec<(Rat, Point)>> = (0..m)
        .map(|k| vec![(Rat::zero(), rest(&slots[k]))])
        .collect();
    // occupant[p] = index of the strand currently in slot p.
    let mut occupant: Vec<usize> = (0..m).collect();

    for (k, letter) in letters.iter().enumerate() {
        let t0 = Rat::new(BigInt::from(k as i64), BigInt::from(slices));
        let t1 = Rat::new(BigInt::from(k as i64 + 1), BigInt::from(slices));
        let tm = (&t0 + &t1) / Rat::from_integer(BigInt::from(2));
        let p = letter.index;
        let (xa, xb) = (&slots[p], &slots[p + 1]);
        let mid_re = (xa + xb) / Rat::from_integer(BigInt::from(2));
        let left_im = match letter.sign {
            Sign::Positive => -&quarter,
            Sign::Negative => quarter.clone(),
        };
        let moves = [
            (occupant[p], xa, xb, left_im.clone()),
            (occupant[p + 1], xb, xa, -left_im),
        ];
        for (strand, from, to, im) in moves {
            let path = &mut paths[strand];
            if path.last().map(|(t, _)| t) != Some(&t0) {
                // Pin the strand until its slice starts, so its motion
                // cannot drift through earlier gadgets.
                path.push((t0.clone(), rest(from)));
            }
            path.push((tm.clone(), Point::new(mid_re.clone(), im)));
            path.push((t1.clone(), rest(to)));
        }
        occupant.swap(p, p + 1);
    }

    for (p, &strand) in occupant.iter().enumerate() {
        let path = &mut paths[strand];
        if path.last().map(|(t, _)| t) != Some(&Rat::one()) {
            path.push((Rat::one(), rest(&slots[p])));
        }
    }

    let strands = paths
        .into_iter()
        .map(Strand::new)
        .collect::<Result<Vec<_>, _>>()?;
    PLBraid::new(strands)
}

/// All times at which the real-part order can change: every breakpoint
/// plus every root of a pairwise real-part difference inside a grid
/// interval.  Sorted and deduplicated; includes 0 and 1.
fn event_times(pl: &PLBraid) -> Vec<Rat> {
    let grid = pl.time_grid();
    let mut events = grid.clone();
    for window in grid.windows(2) {
        let (t0, t1) = (&window[0], &window[1]);
        for i in 0..pl.size() {
            for j in i + 1..pl.size() {
                let a = pl.strands()[i].position_at(t0).re - pl.strands()[j].position_at(t0).re;
                let b = pl.strands()[i].position_at(t1).re - pl.strands()[j].position_at(t1).re;
                if a == b {
                    continue;
                }
                let lambda = &a / (&a - &b);
                if !lambda.is_negative() && lambda <= Rat::one() {
                    events.push(t0 + lambda * (t1 - t0));
                }
            }
        }
    }
    events.sort();
    events.dedup();
    events
}

/// One checkpoint strictly inside each gap between consecutive event
/// times, bracketed by the endpoints 0 and 1.  Transition `k`, between
/// checkpoints `k` and `k+1`, straddles exactly the event time `k`.
fn checkpoint_times(events: &[Rat]) -> Vec<Rat> {
    let two = Rat::from_integer(BigInt::from(2));
    let mut checkpoints = Vec::with_capacity(events.len() + 1);
    checkpoints.push(Rat::zero());
    for window in events.windows(2) {
        checkpoints.push((&window[0] + &window[1]) / &two);
    }
    checkpoints.push(Rat::one());
    checkpoints
}

/// Strand indices sorted by position at time `t`, real part first and
/// imaginary part as the tie-break (the derived `Point` order).
fn lex_order(pl: &PLBraid, t: &Rat) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pl.size()).collect();
    order.sort_by_key(|&k| pl.strands()[k].position_at(t));
    order
}

/// Decomposes the order change into adjacent transpositions by bubble
/// sort.  Each returned triple is `(slot, left strand, right strand)` at
/// the moment of the swap; every inverted pair is swapped exactly once.
fn bubble_transpositions(prev: &[usize], next: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut rank = vec![0usize; next.len()];
    for (position, &strand) in next.iter().enumerate() {
        rank[strand] = position;
    }
    let mut current = prev.to_vec();
    let mut swaps = Vec::new();
    loop {
        let mut changed = false;
        for p in 0..current.len().saturating_sub(1) {
            if rank[current[p]] > rank[current[p + 1]] {
                swaps.push((p, current[p], current[p + 1]));
                current.swap(p, p + 1);
                changed = true;
            }
        }
        if !changed {
            debug_assert_eq!(current, next);
            return swaps;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::rat;

    fn strand(points: &[(i64, i64, i64, i64)]) -> Strand {
        let breakpoints = points
            .iter()
            .map(|&(tn, td, x, y)| (rat(tn, td), Point::integer(x, y)))
            .collect();
        Strand::new(breakpoints).unwrap()
    }

    fn word(text: &str) -> GeneralizedBraid {
        GeneralizedBraid::from_word(text.parse().unwrap())
    }

    #[test]
    fn vertical_strands_read_as_the_identity_word() {
        let pl = PLBraid::new(vec![
            Strand::vertical(Point::real(0)),
            Strand::vertical(Point::real(1)),
            Strand::vertical(Point::real(2)),
        ])
        .unwrap();
        let braid = pl_to_word(&pl).unwrap();
        assert!(braid.word().is_empty());
        assert_eq!(braid.endpoints(), &[0, 1, 2]);
    }

    #[test]
    fn a_single_gadget_crosses_at_one_half() {
        let pl = word_to_pl(&word("B2: s0")).unwrap();
        let events = crossing_events(&pl).unwrap();
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].time, rat(1, 2));
        assert_eq!(events[0].position, 0);
        assert_eq!(events[0].sign, Sign::Positive);
        assert_eq!(events[0].over, 0);
        assert_eq!(events[0].under, 1);

        let negative = word_to_pl(&word("B2: s0^-1")).unwrap();
        let events = crossing_events(&negative).unwrap();
        assert_eq!(events[0].sign, Sign::Negative);
        assert_eq!(events[0].over, 1);
    }

    #[test]
    fn gadget_round_trips_recover_the_exact_letters() {
        for text in [
            "B2: s0",
            "B2: s0^-1",
            "B3: s0 s1 s0",
            "B4: s2 s0^-1 s1 s2^-1 s0",
            "B5: s0 s1 s2 s3 s3 s2 s1 s0",
        ] {
            let braid = word(text);
            let back = pl_to_word(&word_to_pl(&braid).unwrap()).unwrap();
            assert_eq!(back.word(), braid.word(), "round trip of {text}");
        }
    }

    #[test]
    fn collinear_starts_separate_with_a_time_zero_crossing() {
        // Both strands start on the imaginary axis; the lex tie-break
        // (lower imaginary part first) puts the front strand left, and
        // the real parts separate immediately after time zero.
        let pl = PLBraid::new(vec![
            strand(&[(0, 1, 0, 0), (1, 1, 1, 0)]),
            strand(&[(0, 1, 0, 1), (1, 1, -1, 1)]),
        ])
        .unwrap();
        let events = crossing_events(&pl).unwrap();
        assert_eq!(events.len(), 1);
        assert!(events[0].time.is_zero());
        assert_eq!(events[0].sign, Sign::Positive);
        let braid = pl_to_word(&pl).unwrap();
        assert_eq!(braid.word().letters(), word("B2: s0").word().letters());
    }

    #[test]
    fn a_kiss_in_the_real_part_is_not_a_crossing() {
        // The strands meet in real part at t = 1/2 (at distinct
        // imaginary parts) and retreat without exchanging order.
        let pl = PLBraid::new(vec![
            strand(&[(0, 1, 0, 0), (1, 2, 1, 0), (1, 1, 0, 0)]),
            strand(&[(0, 1, 2, 1), (1, 2, 1, 1), (1, 1, 2, 1)]),
        ])
        .unwrap();
        let braid = pl_to_word(&pl).unwrap();
        assert!(braid.word().is_empty());
    }

    #[test]
    fn a_shared_real_part_interval_reads_letters_only_at_the_exit() {
        // The strands ride the imaginary axis together for the first
        // half, then separate with a genuine exchange.
        let pl = PLBraid::new(vec![
            strand(&[(0, 1, 0, 0), (1, 2, 0, 0), (1, 1, 1, 0)]),
            strand(&[(0, 1, 0, 1), (1, 2, 0, 1), (1, 1, -1, 1)]),
        ])
        .unwrap();
        let events = crossing_events(&pl).unwrap();
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].time, rat(1, 2));
        assert_eq!(events[0].sign, Sign::Positive);
    }

    #[test]
    fn a_triple_point_decomposes_into_three_retimed_crossings() {
        let pl = PLBraid::new(vec![
            strand(&[(0, 1, 0, 0), (1, 1, 2, 0)]),
            strand(&[(0, 1, 1, 1), (1, 1, 1, 1)]),
            strand(&[(0, 1, 2, 2), (1, 1, 0, 2)]),
        ])
        .unwrap();
        let events = crossing_events(&pl).unwrap();
        let times: Vec<Rat> = events.iter().map(|e| e.time.clone()).collect();
        assert_eq!(times, vec![rat(3, 8), rat(1, 2), rat(5, 8)]);
        let braid = pl_to_word(&pl).unwrap();
        assert_eq!(braid.word().letters(), word("B3: s0 s1 s0").word().letters());
        assert!(braid.equivalent(&word("B3: s1 s0 s1")).unwrap());
    }

    #[test]
    fn the_empty_word_realizes_as_verticals() {
        let pl = word_to_pl(&word("B3:")).unwrap();
        for s in pl.strands() {
            assert_eq!(s.start(), s.end());
        }
        assert!(pl_to_word(&pl).unwrap().word().is_empty());
    }

    #[test]
    fn nonstandard_endpoints_realize_at_their_labels() {
        let base = word("B3: s0 s1");
        // Deleting the strand that starts at position 1 removes the
        // endpoint label 0 (where that strand ends), leaving {1, 2}.
        let deleted = base.delete_strand(1).unwrap();
        assert_eq!(deleted.endpoints(), &[1, 2]);
        let pl = word_to_pl(&deleted).unwrap();
        assert_eq!(pl.size(), 2);
        let starts: Vec<Point> = pl.strands().iter().map(|s| s.start().clone()).collect();
        assert!(starts.contains(&Point::real(1)));
        assert!(starts.contains(&Point::real(2)));
        let back = pl_to_word(&pl).unwrap();
        assert_eq!(back.word().letters(), deleted.word().letters());
    }

    #[test]
    fn crossing_times_strictly_increase_on_busy_words() {
        let braid = word("B4: s0 s2 s1 s0^-1 s2^-1 s1^-1");
        let events = crossing_events(&word_to_pl(&braid).unwrap()).unwrap();
        assert_eq!(events.len(), 6);
        for pair in events.windows(2) {
            assert!(pair[0].time < pair[1].time);
        }
    }
}
