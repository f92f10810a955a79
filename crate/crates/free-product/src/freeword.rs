use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use braid_core::Sign;

use crate::error::AutError;

/// One letter of a free word: a generator `d<index>` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub index: usize,
    pub sign: Sign,
}

impl FreeLetter {
    pub fn positive(index: usize) -> Self {
        FreeLetter {
            index,
            sign: Sign::Positive,
        }
    }

    pub fn negative(index: usize) -> Self {
        FreeLetter {
            index,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Self {
        FreeLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Self) -> bool {
        self.index == other.index && self.sign == other.sign.flip()
    }
}

impl fmt::Display for FreeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "d{}", self.index),
            Sign::Negative => write!(f, "d{}^-1", self.index),
        }
    }
}

/// A freely reduced word in generators `d0, d1, ...`, each generating an
/// infinite cyclic factor of a free product.  The reduced form is the
/// canonical representative of its group element, so `==` decides equality
/// in the group.
///
/// The empty word prints as the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    /// The identity element.
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// The single-letter word `d<index>`.
    pub fn generator(index: usize) -> Self {
        FreeWord {
            letters: vec![FreeLetter::positive(index)],
        }
    }

    /// Builds a word from raw letters, freely reducing.
    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut word = FreeWord::identity();
        for letter in letters {
            word.push(letter);
        }
        word
    }

    /// Appends one letter, cancelling against the current tail if possible.
    pub fn push(&mut self, letter: FreeLetter) {
        match self.letters.last() {
            Some(&tail) if tail.cancels(letter) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The largest generator index appearing, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.index).max()
    }

    /// The set of generator indices appearing.
    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().map(|l| l.index).collect()
    }

    /// `self · other`, reduced.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &letter in &other.letters {
            out.push(letter);
        }
        out
    }

    /// The group inverse.
    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `u⁻¹ · self · u`, reduced.
    pub fn conjugated_by(&self, u: &FreeWord) -> FreeWord {
        u.inverse().concat(self).concat(u)
    }

    /// The sum of letter signs for one generator (its image under
    /// abelianizing every other generator away).
    pub fn exponent_sum(&self, index: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index == index)
            .map(|l| match l.sign {
                Sign::Positive => 1,
                Sign::Negative => -1,
            })
            .sum()
    }

    /// Deletes every letter whose generator is not in `keep`, then reduces.
    /// This is the retraction of the free product onto the factors in
    /// `keep`, and it is a group homomorphism.
    pub fn project(&self, keep: &BTreeSet<usize>) -> FreeWord {
        FreeWord::from_letters(
            self.letters
                .iter()
                .copied()
                .filter(|l| keep.contains(&l.index)),
        )
    }

    /// Applies the homomorphism sending each generator `d_i` to
    /// `images(i)`; inverse letters map to the inverse image.
    pub fn substitute<F>(&self, mut images: F) -> Result<FreeWord, AutError>
    where
        F: FnMut(usize) -> Result<FreeWord, AutError>,
    {
        let mut out = FreeWord::identity();
        for &letter in &self.letters {
            let image = images(letter.index)?;
            let piece = match letter.sign {
                Sign::Positive => image,
                Sign::Negative => image.inverse(),
            };
            for &l in &piece.letters {
                out.push(l);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = AutError;

    /// Parses the `d0 d1^-1` grammar.  Whitespace separates letters; the
    /// empty (or all-whitespace) string is the identity.
    fn from_str(s: &str) -> Result<Self, AutError> {
        let mut word = FreeWord::identity();
        let mut rest = s;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                return Ok(word);
            }
            let end = trimmed
                .find(char::is_whitespace)
                .unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            word.push(parse_letter(token, offset)?);
            rest = &trimmed[end..];
            offset += end;
        }
    }
}

fn parse_letter(token: &str, offset: usize) -> Result<FreeLetter, AutError> {
    let body = token.strip_prefix('d').ok_or_else(|| {
        AutError::syntax(offset, format!("expected a letter like d0 or d0^-1, found `{token}`"))
    })?;
    let (digits, sign) = match body.strip_suffix("^-1") {
        Some(digits) => (digits, Sign::Negative),
        None => (body, Sign::Positive),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(AutError::syntax(
            offset + 1,
            format!("expected a generator index, found `{body}`"),
        ));
    }
    let index: usize = digits.parse().map_err(|_| {
        AutError::syntax(offset + 1, format!("generator index `{digits}` too large"))
    })?;
    Ok(FreeLetter { index, sign })
}
