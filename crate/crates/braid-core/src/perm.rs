use std::fmt;

use crate::error::BraidError;

/// A permutation of `{0, .., n-1}`.
///
/// `images[i]` is the image of `i`.  For a braid this is read as "the strand
/// that *starts* at position `i` *ends* at position `images[i]`".
///
/// Composition is left to right: `(p.then(&q))` first applies `p`, then `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(BraidError::StrandOutOfRange {
                    index: im,
                    strands: n,
                });
            }
            if seen[im] {
                return Err(BraidError::internal(format!(
                    "image list is not a bijection: {im} repeats"
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `i` and `i+1` on `n` points.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self, BraidError> {
        if n < 2 || i + 1 >= n {
            return Err(BraidError::GeneratorOutOfRange { index: i, strands: n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Ok(Permutation { images })
    }

    /// The half twist `i -> n-1-i` (the permutation underlying the Garside
    /// element).
    pub fn half_twist(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Left-to-right composition: `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, BraidError> {
        if self.size() != other.size() {
            return Err(BraidError::StrandMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// The number of inversions, i.e. the length of the shortest positive
    /// braid word inducing this permutation.
    pub fn inversion_count(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, fixed points suppressed; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "({start}")?;
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                write!(f, " {cur}")?;
                seen[cur] = true;
                cur = self.images[cur];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
