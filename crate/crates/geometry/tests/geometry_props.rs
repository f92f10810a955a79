//! Randomized properties tying the geometric realization to the
//! algebraic word problem.

use braid_core::random::{insert_relators, random_word};
use braid_core::{equivalent, BraidWord, GeneralizedBraid, Permutation};
use braid_geometry::{
    dogleg_connect, pl_to_word, relabel_isomorphism, word_to_pl, PLBraid, Point, Rat,
};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn realize(word: &BraidWord) -> PLBraid {
    word_to_pl(&GeneralizedBraid::from_word(word.clone())).unwrap()
}

/// The permutation read directly off the strand geometry: start rank
/// maps to end rank in the lexicographic point order.
fn endpoint_permutation(pl: &PLBraid) -> Permutation {
    let rank = |points: &mut Vec<(Point, usize)>| {
        points.sort();
        let mut ranks = vec![0usize; points.len()];
        for (rank, (_, strand)) in points.iter().enumerate() {
            ranks[*strand] = rank;
        }
        ranks
    };
    let mut starts: Vec<(Point, usize)> = pl
        .strands()
        .iter()
        .enumerate()
        .map(|(k, s)| (s.start().clone(), k))
        .collect();
    let mut ends: Vec<(Point, usize)> = pl
        .strands()
        .iter()
        .enumerate()
        .map(|(k, s)| (s.end().clone(), k))
        .collect();
    let start_ranks = rank(&mut starts);
    let end_ranks = rank(&mut ends);
    let mut images = vec![0usize; pl.size()];
    for strand in 0..pl.size() {
        images[start_ranks[strand]] = end_ranks[strand];
    }
    Permutation::from_images(images).unwrap()
}

#[test]
fn gadget_round_trips_are_exact_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E01);
    for _ in 0..300 {
        let strands = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=10);
        let word = random_word(&mut rng, strands, len);
        let pl = realize(&word);
        let back = pl_to_word(&pl).unwrap();
        assert_eq!(back.word(), &word, "exact letter recovery");
        assert!(equivalent(back.word(), &word).unwrap(), "dual oracle check");
        assert_eq!(
            endpoint_permutation(&pl),
            word.underlying_permutation(),
            "geometric and algebraic permutations agree"
        );
    }
}

#[test]
fn relator_insertion_is_invisible_after_a_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E02);
    for _ in 0..60 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=8);
        let word = random_word(&mut rng, strands, len);
        let padded = insert_relators(&mut rng, &word, 2);
        let back = pl_to_word(&realize(&padded)).unwrap();
        assert!(equivalent(back.word(), &word).unwrap());
    }
}

fn random_configuration(rng: &mut ChaCha8Rng, size: usize) -> Vec<Point> {
    let mut points: Vec<Point> = Vec::new();
    while points.len() < size {
        let point = if rng.gen_bool(0.3) {
            // Collinear cluster: everything on the real axis.
            Point::new(
                Rat::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=4))),
                Rat::from_integer(BigInt::from(0)),
            )
        } else {
            Point::new(
                Rat::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=4))),
                Rat::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=4))),
            )
        };
        if !points.contains(&point) {
            points.push(point);
        }
    }
    points
}

#[test]
fn random_doglegs_are_disjoint_and_read_their_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E03);
    for _ in 0..60 {
        let size = rng.gen_range(1..=8);
        let starts = random_configuration(&mut rng, size);
        let mut ends = starts.clone();
        for k in (1..size).rev() {
            ends.swap(k, rng.gen_range(0..=k));
        }
        let braid = dogleg_connect(&starts, &ends).unwrap();
        assert!(braid.certify_disjoint().is_ok());

        let word = pl_to_word(&braid).unwrap();
        assert_eq!(
            endpoint_permutation(&braid),
            word.word().underlying_permutation()
        );
    }
}

#[test]
fn relabeling_preserves_equivalence_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E04);
    for _ in 0..25 {
        let word = random_word(&mut rng, 3, 6);
        let padded = insert_relators(&mut rng, &word, 1);
        let targets = random_configuration(&mut rng, 3);

        let image = |w: &BraidWord| {
            let moved = relabel_isomorphism(&realize(w), &targets).unwrap();
            pl_to_word(&moved).unwrap()
        };
        assert!(image(&word).equivalent(&image(&padded)).unwrap());
    }
}
