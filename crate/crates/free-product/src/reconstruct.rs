use std::collections::{HashSet, VecDeque};

use braid_core::{BraidWord, Letter, Sign};

use crate::artin::apply_letter;
use crate::dagger::DaggerAutomorphism;
use crate::error::AutError;
use crate::freeword::FreeWord;

/// Searches for a braid word of length at most `max_length` whose induced
/// map equals `target`, breadth first over words on `target.size()`
/// strands.  States are deduplicated by their generator images, and
/// within each length the extension letters are tried in the fixed order
/// `s0, s0^-1, s1, s1^-1, ...`, so the returned witness is the shortest
/// solution and lexicographically least (in that letter order) among
/// shortest.
///
/// The target must have standard endpoints `0 .. m-1`; relabel first if
/// not.  `Ok(None)` means no word within the bound induces the map — a
/// result, not an error.
pub fn reconstruct_braid(
    target: &DaggerAutomorphism,
    max_length: usize,
) -> Result<Option<BraidWord>, AutError> {
    if !target.has_standard_endpoints() {
        return Err(AutError::Precondition(format!(
            "reconstruction needs standard endpoints 0..{}, got {:?}",
            target.size() - 1,
            target.endpoints()
        )));
    }
    let m = target.size();
    let goal: Vec<FreeWord> = target.images().to_vec();
    let start: Vec<FreeWord> = (0..m).map(FreeWord::generator).collect();
    if start == goal {
        return Ok(Some(BraidWord::identity(m)?));
    }

    let alphabet: Vec<Letter> = (0..m.saturating_sub(1))
        .flat_map(|index| {
            [
                Letter {
                    index,
                    sign: Sign::Positive,
                },
                Letter {
                    index,
                    sign: Sign::Negative,
                },
            ]
        })
        .collect();

    let mut visited: HashSet<Vec<FreeWord>> = HashSet::new();
    visited.insert(start.clone());
    let mut frontier: VecDeque<(Vec<FreeWord>, Vec<Letter>)> = VecDeque::new();
    frontier.push_back((start, Vec::new()));

    while let Some((images, word)) = frontier.pop_front() {
        if word.len() == max_length {
            continue;
        }
        for &letter in &alphabet {
            let next_images: Vec<FreeWord> =
                images.iter().map(|im| apply_letter(letter, im)).collect();
            if next_images == goal {
                let mut letters = word.clone();
                letters.push(letter);
                return Ok(Some(BraidWord::new(m, letters)?));
            }
            if visited.insert(next_images.clone()) {
                let mut letters = word.clone();
                letters.push(letter);
                frontier.push_back((next_images, letters));
            }
        }
    }
    Ok(None)
}
