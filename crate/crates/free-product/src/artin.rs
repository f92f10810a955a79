use braid_core::{BraidWord, Letter, Sign};

use crate::error::AutError;
use crate::freeword::{FreeLetter, FreeWord};

/// Applies the action of one braid generator to a free word over the
/// standard generators `d0 .. d(n-1)` of the braid's strand set.
///
/// The positive generator at `index` sends
/// `d_i ↦ d_i d_{i+1} d_i⁻¹` and `d_{i+1} ↦ d_i`, fixing the rest; the
/// negative generator sends `d_i ↦ d_{i+1}` and
/// `d_{i+1} ↦ d_{i+1}⁻¹ d_i d_{i+1}`.
pub(crate) fn apply_letter(letter: Letter, word: &FreeWord) -> FreeWord {
    let i = letter.index;
    let mut out = FreeWord::identity();
    for &l in word.letters() {
        // The image of the positive generator d(l.index); negative letters
        // push its reversed inverse below.
        let image: &[FreeLetter] = match (letter.sign, l.index) {
            (Sign::Positive, j) if j == i => &[
                FreeLetter::positive(i),
                FreeLetter::positive(i + 1),
                FreeLetter::negative(i),
            ],
            (Sign::Positive, j) if j == i + 1 => &[FreeLetter::positive(i)],
            (Sign::Negative, j) if j == i => &[FreeLetter::positive(i + 1)],
            (Sign::Negative, j) if j == i + 1 => &[
                FreeLetter::negative(i + 1),
                FreeLetter::positive(i),
                FreeLetter::positive(i + 1),
            ],
            (_, j) => &[FreeLetter::positive(j)],
        };
        match l.sign {
            Sign::Positive => {
                for &x in image {
                    out.push(x);
                }
            }
            Sign::Negative => {
                for &x in image.iter().rev() {
                    out.push(x.inverse());
                }
            }
        }
    }
    out
}

/// The action of a braid word on a free word, letters applied first to
/// last, so that the action of `f · g` is the action of `g` after the
/// action of `f`.
///
/// Every generator index in `word` must lie below the braid's strand
/// count.
pub fn artin_action(braid: &BraidWord, word: &FreeWord) -> Result<FreeWord, AutError> {
    if let Some(max) = word.max_index() {
        if max >= braid.strands() {
            return Err(AutError::IndexOutOfRange {
                index: max,
                context: format!("the braid acts on {} generators", braid.strands()),
            });
        }
    }
    let mut out = word.clone();
    for &letter in braid.letters() {
        out = apply_letter(letter, &out);
    }
    Ok(out)
}
