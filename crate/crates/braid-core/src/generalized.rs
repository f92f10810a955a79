use std::fmt;

use crate::error::BraidError;
use crate::handle;
use crate::word::BraidWord;

/// A braid whose endpoints carry labels from an arbitrary finite subset of
/// the naturals instead of `{0..m-1}`.
///
/// Restrictions of infinite braids are the motivating case: deleting strands
/// from a braid leaves endpoint labels with gaps.  The word is an ordinary
/// `BraidWord` on the `m` start positions; `endpoints` is the strictly
/// increasing list of labels sitting at final positions `0..m-1`, so the
/// strand starting at `i` ends on label `endpoints[perm(i)]`.  When the
/// labels are exactly `{0..m-1}` this degenerates to a plain braid word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedBraid {
    word: BraidWord,
    endpoints: Vec<usize>,
}

impl GeneralizedBraid {
    /// Pairs a word with an endpoint label set.  The labels must be strictly
    /// increasing and exactly as many as there are strands.
    pub fn new(word: BraidWord, endpoints: Vec<usize>) -> Result<Self, BraidError> {
        if endpoints.len() != word.strands() {
            return Err(BraidError::InvalidEndpoints(format!(
                "{} endpoints for {} strands",
                endpoints.len(),
                word.strands()
            )));
        }
        if !endpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(BraidError::InvalidEndpoints(format!(
                "labels must be strictly increasing, got {endpoints:?}"
            )));
        }
        Ok(GeneralizedBraid { word, endpoints })
    }

    /// An ordinary braid: endpoint labels `{0..m-1}`.
    pub fn from_word(word: BraidWord) -> Self {
        let endpoints = (0..word.strands()).collect();
        GeneralizedBraid { word, endpoints }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn endpoints(&self) -> &[usize] {
        &self.endpoints
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    /// The matching `τ`: strand starting at `i` ends on label `τ(i)`.
    pub fn matching(&self) -> Vec<usize> {
        let perm = self.word.underlying_permutation();
        (0..self.strands())
            .map(|i| self.endpoints[perm.apply(i)])
            .collect()
    }

    /// True when the endpoints are `{0..m-1}` and every strand returns to
    /// its own label (the regime in which towers can be composed freely).
    pub fn is_pure_standard(&self) -> bool {
        self.endpoints.iter().enumerate().all(|(i, &e)| i == e)
            && self.word.is_pure()
    }

    /// Removes the strand that *starts* at position `start`: traces it
    /// through the word, drops every letter it participates in, shifts
    /// higher positions down, and removes its endpoint label `τ(start)`.
    pub fn delete_strand(&self, start: usize) -> Result<GeneralizedBraid, BraidError> {
        let m = self.strands();
        if start >= m {
            return Err(BraidError::StrandOutOfRange {
                index: start,
                strands: m,
            });
        }
        if m == 1 {
            return Err(BraidError::NoStrands);
        }

        let mut pos = start;
        let mut letters = Vec::with_capacity(self.word.len());
        for &letter in self.word.letters() {
            let i = letter.index;
            if i == pos {
                pos = i + 1; // the doomed strand crosses rightward
            } else if i + 1 == pos {
                pos = i; // crosses leftward
            } else if i > pos {
                letters.push(crate::word::Letter {
                    index: i - 1,
                    ..letter
                });
            } else {
                letters.push(letter);
            }
        }

        let doomed_rank = self.word.underlying_permutation().apply(start);
        let mut endpoints = self.endpoints.clone();
        endpoints.remove(doomed_rank);

        let word = BraidWord::new(m - 1, letters)
            .map_err(|e| BraidError::internal(format!("deletion produced a bad word: {e}")))?;
        GeneralizedBraid::new(word, endpoints)
    }

    /// Replaces the endpoint labels with `new_endpoints` (given in the same
    /// order, i.e. the image of the old sorted label list).  The word is
    /// untouched.
    pub fn relabel(&self, new_endpoints: &[usize]) -> Result<GeneralizedBraid, BraidError> {
        if new_endpoints.len() != self.endpoints.len() {
            return Err(BraidError::NonMonotoneRelabel(format!(
                "{} labels for {} endpoints",
                new_endpoints.len(),
                self.endpoints.len()
            )));
        }
        if !new_endpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(BraidError::NonMonotoneRelabel(format!(
                "image {new_endpoints:?} is not strictly increasing"
            )));
        }
        GeneralizedBraid::new(self.word.clone(), new_endpoints.to_vec())
    }

    /// Equality of restrictions: same endpoint labels and equivalent words.
    /// (The matchings then agree automatically, since equivalent words share
    /// a permutation.)
    pub fn equivalent(&self, other: &GeneralizedBraid) -> Result<bool, BraidError> {
        if self.strands() != other.strands() {
            return Ok(false);
        }
        if self.endpoints != other.endpoints {
            return Ok(false);
        }
        handle::equivalent(&self.word, &other.word)
    }
}

impl fmt::Display for GeneralizedBraid {
    /// `B2: s0 | E=0,2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | E=", self.word)?;
        for (k, e) in self.endpoints.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
