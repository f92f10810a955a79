//! Seeded randomized word generators for tests and harnesses.

use rand::Rng;

use crate::word::{BraidWord, Letter, Sign};

/// A uniformly random word: each letter independently uniform over the
/// `2(n-1)` signed generators.  On one strand the only word is empty.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 1, "a braid needs at least one strand");
    if strands == 1 {
        return BraidWord::identity(1).expect("one strand is fine");
    }
    let letters = (0..len)
        .map(|_| {
            let index = rng.gen_range(0..strands - 1);
            let sign = if rng.gen::<bool>() {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Letter { index, sign }
        })
        .collect();
    BraidWord::new(strands, letters).expect("indices drawn in range")
}

/// Produces a word equivalent to `word` by splicing in `count` relator
/// subwords (free inverse pairs, the braid relation, far commutation) at
/// random positions.  Each inserted subword is trivial in the group, so the
/// result represents the same braid.
pub fn insert_relators<R: Rng + ?Sized>(
    rng: &mut R,
    word: &BraidWord,
    count: usize,
) -> BraidWord {
    let n = word.strands();
    let mut letters = word.letters().to_vec();
    for _ in 0..count {
        let relator = random_relator(rng, n);
        if relator.is_empty() {
            continue; // n == 1: nothing to insert
        }
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, relator);
    }
    BraidWord::new(n, letters).expect("relator letters are in range")
}

fn random_relator<R: Rng + ?Sized>(rng: &mut R, strands: usize) -> Vec<Letter> {
    if strands < 2 {
        return Vec::new();
    }
    // Pick among the relator families available at this strand count.
    let families = if strands >= 4 { 3 } else if strands >= 3 { 2 } else { 1 };
    match rng.gen_range(0..families) {
        0 => {
            // Free inverse pair s_i^e s_i^-e.
            let i = rng.gen_range(0..strands - 1);
            let l = if rng.gen::<bool>() {
                Letter::positive(i)
            } else {
                Letter::negative(i)
            };
            vec![l, l.inverse()]
        }
        1 => {
            // Braid relation: s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1,
            // or its inverse.
            let i = rng.gen_range(0..strands - 2);
            let half = [
                Letter::positive(i),
                Letter::positive(i + 1),
                Letter::positive(i),
            ];
            let mut out: Vec<Letter> = half.to_vec();
            out.extend([
                Letter::negative(i + 1),
                Letter::negative(i),
                Letter::negative(i + 1),
            ]);
            if rng.gen::<bool>() {
                out.reverse();
                for l in &mut out {
                    *l = l.inverse();
                }
            }
            out
        }
        _ => {
            // Far commutation: s_i s_j s_i^-1 s_j^-1 with |i-j| >= 2.
            let i = rng.gen_range(0..strands - 3);
            let j = rng.gen_range(i + 2..strands - 1);
            let (a, b) = if rng.gen::<bool>() {
                (Letter::positive(i), Letter::positive(j))
            } else {
                (Letter::negative(i), Letter::negative(j))
            };
            vec![a, b, a.inverse(), b.inverse()]
        }
    }
}
