use std::fmt;
use std::str::FromStr;

use crate::error::BraidError;
use crate::perm::Permutation;

/// The sign of a generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One letter of a braid word: the generator `s{index}` or its inverse.
///
/// The derived order (index first, positive before negative) is the
/// lexicographic order used whenever a canonical witness word is wanted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Positive,
        }
    }

    pub fn negative(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the generators `s0 .. s{n-2}` of the braid group on `n` strands.
///
/// Words are kept verbatim: no reduction happens on construction, so a word
/// is a faithful record of its letters.  Equality of `BraidWord` values is
/// letter-by-letter; group-element equality is decided by
/// [`crate::equivalent`] or by comparing normal forms.
///
/// The textual form is `B<n>:` followed by the letters separated by single
/// spaces, e.g. `B3: s0 s1^-1`; the empty word on three strands is `B3:`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// Builds a word, checking every generator index against the strand
    /// count.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for letter in &letters {
            if letter.index + 1 >= strands {
                return Err(BraidError::GeneratorOutOfRange {
                    index: letter.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter in place.
    pub fn push(&mut self, letter: Letter) -> Result<(), BraidError> {
        if letter.index + 1 >= self.strands {
            return Err(BraidError::GeneratorOutOfRange {
                index: letter.index,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Concatenation; both words must live on the same strand count.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The group inverse: letters reversed, signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` raised to an integer power (negative powers invert first).
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Sum of the exponents of all letters, i.e. the image under the
    /// abelianization map to the integers.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.exponent()).sum()
    }

    /// The permutation sending each start position to its end position.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // images[p] = current position of the strand that started at p, so
        // each letter swaps the two values i and i+1 wherever they occur.
        let mut where_is = images.clone(); // where_is[pos] = start of strand at pos
        for letter in &self.letters {
            let i = letter.index;
            where_is.swap(i, i + 1);
            images[where_is[i]] = i;
            images[where_is[i + 1]] = i + 1;
        }
        Permutation::from_images(images).expect("swaps preserve bijectivity")
    }

    /// Whether the word induces the identity permutation.
    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().is_identity()
    }

    /// The word with adjacent inverse pairs cancelled repeatedly (free
    /// reduction only; no braid relations applied).
    pub fn free_reduced(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &letter in &self.letters {
            if stack.last() == Some(&letter.inverse()) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for letter in &self.letters {
            match letter.sign {
                Sign::Positive => write!(f, " s{}", letter.index)?,
                Sign::Negative => write!(f, " s{}^-1", letter.index)?,
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let rest = input
            .strip_prefix('B')
            .ok_or_else(|| BraidError::syntax(0, "expected 'B' at the start of a braid word"))?;
        let digits_len = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        if digits_len == 0 {
            return Err(BraidError::syntax(1, "expected a strand count after 'B'"));
        }
        let strands: usize = rest[..digits_len]
            .parse()
            .map_err(|_| BraidError::syntax(1, "strand count does not fit in usize"))?;
        let after_digits = 1 + digits_len;
        let rest = &input[after_digits..];
        let rest = rest.strip_prefix(':').ok_or_else(|| {
            BraidError::syntax(after_digits, "expected ':' after the strand count")
        })?;
        let body_start = after_digits + 1;

        let mut word = BraidWord::identity(strands)?;
        let mut offset = 0;
        let bytes = rest.as_bytes();
        while offset < bytes.len() {
            if bytes[offset].is_ascii_whitespace() {
                offset += 1;
                continue;
            }
            let token_start = offset;
            while offset < bytes.len() && !bytes[offset].is_ascii_whitespace() {
                offset += 1;
            }
            let token = &rest[token_start..offset];
            let letter = parse_letter(token, body_start + token_start)?;
            word.push(letter).map_err(|e| match e {
                BraidError::GeneratorOutOfRange { index, strands } => BraidError::Syntax {
                    position: body_start + token_start,
                    message: format!(
                        "generator s{index} out of range: B{strands} has generators s0..s{}",
                        strands.saturating_sub(2)
                    ),
                },
                other => other,
            })?;
        }
        Ok(word)
    }
}

fn parse_letter(token: &str, position: usize) -> Result<Letter, BraidError> {
    let body = token
        .strip_prefix('s')
        .ok_or_else(|| BraidError::syntax(position, format!("expected a letter like 's0' or 's0^-1', found '{token}'")))?;
    let (digits, sign) = match body.strip_suffix("^-1") {
        Some(digits) => (digits, Sign::Negative),
        None => (body, Sign::Positive),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(BraidError::syntax(
            position,
            format!("expected a letter like 's0' or 's0^-1', found '{token}'"),
        ));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| BraidError::syntax(position, "generator index does not fit in usize"))?;
    Ok(Letter { index, sign })
}
