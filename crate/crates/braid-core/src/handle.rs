//! Word-problem engine one: handle reduction.
//!
//! A handle is a subword `s_i^e v s_i^{-e}` whose interior `v` only uses
//! generators with index strictly greater than `i`.  Reducing it deletes the
//! two `s_i` letters and rewrites every interior `s_{i+1}^d` as
//! `s_{i+1}^{-e} s_i^d s_{i+1}^e`; letters with index at least `i+2` commute
//! with `s_i` and pass through untouched.  Each reduction is an equality in
//! the braid group, the process always terminates, and a word reduces to the
//! empty word exactly when it represents the identity.  This yields a
//! decision procedure for equivalence: reduce `u v^{-1}` and test emptiness.
//!
//! The implementation always reduces the handle whose *closing* letter comes
//! first; termination then holds with a bound that is comfortably within the
//! step budget for the word sizes this crate targets, and the budget turns a
//! would-be hang into an error.

use crate::error::BraidError;
use crate::word::{BraidWord, Letter};

/// Default cap on the number of handle reductions in one call.
pub const DEFAULT_HANDLE_BUDGET: usize = 1_000_000;

/// Fully handle-reduces `word` with the default step budget.
///
/// The result is freely reduced and contains no handle.  It is empty if and
/// only if `word` represents the identity braid.
pub fn handle_reduce(word: &BraidWord) -> Result<BraidWord, BraidError> {
    handle_reduce_with_budget(word, DEFAULT_HANDLE_BUDGET)
}

/// [`handle_reduce`] with an explicit step budget.
pub fn handle_reduce_with_budget(
    word: &BraidWord,
    budget: usize,
) -> Result<BraidWord, BraidError> {
    let mut letters = word.free_reduced().letters().to_vec();
    for _step in 0..budget {
        let Some((open, close)) = first_closing_handle(&letters) else {
            return BraidWord::new(word.strands(), letters);
        };
        letters = reduce_handle(&letters, open, close);
        free_reduce_in_place(&mut letters);
    }
    Err(BraidError::BudgetExceeded { budget })
}

/// Decides whether `word` represents the identity braid.
pub fn is_trivial(word: &BraidWord) -> Result<bool, BraidError> {
    Ok(handle_reduce(word)?.is_empty())
}

/// Decides whether two words represent the same braid.
pub fn equivalent(left: &BraidWord, right: &BraidWord) -> Result<bool, BraidError> {
    is_trivial(&left.compose(&right.inverse())?)
}

/// Finds the handle whose closing letter is leftmost, returning the index
/// pair `(open, close)`.
fn first_closing_handle(letters: &[Letter]) -> Option<(usize, usize)> {
    for close in 1..letters.len() {
        let Letter { index, sign } = letters[close];
        // Scan left across the would-be interior (indices > `index`); the
        // first letter at or below `index` decides.
        for open in (0..close).rev() {
            if letters[open].index > index {
                continue;
            }
            if letters[open].index == index && letters[open].sign == sign.flip() {
                return Some((open, close));
            }
            break;
        }
    }
    None
}

/// Rewrites the handle `letters[open..=close]`, leaving the rest untouched.
fn reduce_handle(letters: &[Letter], open: usize, close: usize) -> Vec<Letter> {
    let i = letters[close].index;
    let closing_sign = letters[close].sign;
    debug_assert_eq!(letters[open].index, i);
    debug_assert_eq!(letters[open].sign, closing_sign.flip());

    let mut out = Vec::with_capacity(letters.len() + 2 * (close - open));
    out.extend_from_slice(&letters[..open]);
    for &letter in &letters[open + 1..close] {
        debug_assert!(letter.index > i);
        if letter.index == i + 1 {
            // s_{i+1}^d  ->  s_{i+1}^{closing} s_i^d s_{i+1}^{-closing},
            // where the opening letter has sign -closing.
            out.push(Letter { index: i + 1, sign: closing_sign });
            out.push(Letter { index: i, sign: letter.sign });
            out.push(Letter { index: i + 1, sign: closing_sign.flip() });
        } else {
            out.push(letter);
        }
    }
    out.extend_from_slice(&letters[close + 1..]);
    out
}

fn free_reduce_in_place(letters: &mut Vec<Letter>) {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &letter in letters.iter() {
        if stack.last() == Some(&letter.inverse()) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    *letters = stack;
}

/// A freely reduced word with no handles is `s`-positive, `s`-negative, or
/// empty: among occurrences of its lowest generator index all signs agree.
/// Exposed for tests and diagnostics.
pub fn is_handle_free(word: &BraidWord) -> bool {
    first_closing_handle(word.letters()).is_none()
}
