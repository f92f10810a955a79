//! Word-problem engine two: the left-greedy normal form.
//!
//! Every braid factors uniquely as `delta^p · f_1 · .. · f_k` where `delta`
//! is the positive half twist, each `f_j` is a permutation braid (a positive
//! braid in which every pair of strands crosses at most once, identified
//! here with its permutation), no `f_j` is the identity or the half twist,
//! and each adjacent pair is left-weighted: every generator that could start
//! `f_{j+1}` already finishes `f_j`.  Two words represent the same braid if
//! and only if their normal forms are identical, which gives a second,
//! independent decision procedure next to handle reduction.

use std::fmt;

use crate::error::BraidError;
use crate::perm::Permutation;
use crate::word::{BraidWord, Letter, Sign};

/// The left-greedy normal form `delta^infimum · factors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    /// Computes the normal form of a word.  This always terminates; no
    /// budget is needed.
    pub fn of(word: &BraidWord) -> NormalForm {
        let n = word.strands();
        let mut infimum = 0i64;
        let mut factors: Vec<Permutation> = Vec::with_capacity(word.len());
        for &Letter { index, sign } in word.letters() {
            let t = Permutation::adjacent_transposition(n, index)
                .expect("letter indices were validated on construction");
            match sign {
                Sign::Positive => factors.push(t),
                Sign::Negative => {
                    // s_i^-1 = delta^-1 · (delta t_i); move the new delta^-1
                    // leftward through the existing factors with the flip
                    // automorphism.
                    infimum -= 1;
                    for f in &mut factors {
                        *f = flip(f);
                    }
                    factors.push(
                        Permutation::half_twist(n)
                            .then(&t)
                            .expect("sizes match"),
                    );
                }
            }
        }
        left_weight(n, &mut infimum, &mut factors);
        NormalForm {
            strands: n,
            infimum,
            factors,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The power of the half twist in front.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// The left-weighted permutation-braid factors, in order.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// The number of factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn is_trivial(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// A word spelling out the normal form verbatim: half twists first,
    /// then each factor as a positive word.
    pub fn to_word(&self) -> BraidWord {
        let delta = half_twist_word(self.strands);
        let mut word = BraidWord::identity(self.strands).expect("strands >= 1");
        let power = if self.infimum >= 0 {
            delta.power(self.infimum)
        } else {
            delta.inverse().power(-self.infimum)
        };
        word = word.compose(&power).expect("same strand count");
        for f in &self.factors {
            word = word
                .compose(&positive_word_of(f))
                .expect("same strand count");
        }
        word
    }
}

impl fmt::Display for NormalForm {
    /// `delta^p` followed by each factor as a bracketed positive word, e.g.
    /// `delta^-1 [s0 s1] [s0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta^{}", self.infimum)?;
        for factor in &self.factors {
            write!(f, " [")?;
            let word = positive_word_of(factor);
            for (k, letter) in word.letters().iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "s{}", letter.index)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// The normal form of a word; `normal_form(u) == normal_form(v)` if and only
/// if `u` and `v` represent the same braid.
pub fn normal_form(word: &BraidWord) -> NormalForm {
    NormalForm::of(word)
}

/// The canonical positive word for the half twist on `n` strands.
pub fn half_twist_word(n: usize) -> BraidWord {
    positive_word_of(&Permutation::half_twist(n))
}

/// The canonical positive word inducing a permutation: repeatedly undo the
/// smallest descent.  Its length is the inversion count, so it is a reduced
/// word and spells the permutation braid of `p`.
pub fn positive_word_of(p: &Permutation) -> BraidWord {
    let n = p.size();
    let mut images = p.images().to_vec();
    let mut letters = Vec::with_capacity(p.inversion_count());
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| images[i] > images[i + 1]) {
        images.swap(i, i + 1);
        letters.push(Letter::positive(i));
    }
    BraidWord::new(n, letters).expect("indices < n-1 by construction")
}

/// Descents of `p`: the set of `i` with `p(i) > p(i+1)`.  For a permutation
/// braid these are exactly the generators that can end it.
fn descents(p: &Permutation) -> Vec<bool> {
    let n = p.size();
    let mut out = vec![false; n.saturating_sub(1)];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = p.apply(i) > p.apply(i + 1);
    }
    out
}

/// The flip automorphism `f -> delta f delta^-1`, i.e. conjugation of the
/// permutation by `i -> n-1-i`.
fn flip(f: &Permutation) -> Permutation {
    let n = f.size();
    let images: Vec<usize> = (0..n).map(|x| n - 1 - f.apply(n - 1 - x)).collect();
    Permutation::from_images(images).expect("conjugate of a bijection")
}

fn is_half_twist(p: &Permutation) -> bool {
    let n = p.size();
    (0..n).all(|i| p.apply(i) == n - 1 - i)
}

/// Rewrites `factors` in place until it is left-weighted, free of identity
/// factors, and free of half twists (which migrate into `infimum`).
fn left_weight(n: usize, infimum: &mut i64, factors: &mut Vec<Permutation>) {
    // Termination: total inversion count is invariant under slides and
    // strictly drops when a factor dies; within constant total length each
    // slide moves one crossing strictly leftward.  The bound below is far
    // above anything reachable and exists only to turn a logic bug into a
    // loud failure.
    let total_length: usize = factors.iter().map(|f| f.inversion_count()).sum();
    let mut fuel = (total_length + 2) * (total_length + 2) * (factors.len() + 2) + 64;
    loop {
        fuel = fuel
            .checked_sub(1)
            .unwrap_or_else(|| panic!("left-weighting failed to stabilize: a slide loop bug"));

        if let Some(j) = factors.iter().position(|f| f.is_identity()) {
            factors.remove(j);
            continue;
        }
        if let Some(j) = factors.iter().position(is_half_twist) {
            // f_0 .. f_{j-1} delta rest = delta flip(f_0 .. f_{j-1}) rest.
            factors.remove(j);
            for f in &mut factors[..j] {
                *f = flip(f);
            }
            *infimum += 1;
            continue;
        }

        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            loop {
                let start_b = descents(&factors[j + 1]);
                let finish_a = descents(&factors[j].inverse());
                let Some(i) = (0..n.saturating_sub(1))
                    .find(|&i| start_b[i] && !finish_a[i])
                else {
                    break;
                };
                // Slide one crossing left: a <- a t_i, b <- t_i b.  The side
                // conditions i not finishing a / i starting b make both
                // products permutation braids again.
                let t = Permutation::adjacent_transposition(n, i).expect("i < n-1");
                factors[j] = factors[j].then(&t).expect("sizes match");
                factors[j + 1] = t.then(&factors[j + 1]).expect("sizes match");
                changed = true;
            }
        }
        if !changed
            && !factors.iter().any(|f| f.is_identity())
            && !factors.iter().any(is_half_twist)
        {
            return;
        }
    }
}

/// Convenience: decide equivalence by comparing normal forms.
pub fn equivalent_by_normal_form(
    left: &BraidWord,
    right: &BraidWord,
) -> Result<bool, BraidError> {
    if left.strands() != right.strands() {
        return Err(BraidError::StrandMismatch {
            left: left.strands(),
            right: right.strands(),
        });
    }
    Ok(NormalForm::of(left) == NormalForm::of(right))
}
