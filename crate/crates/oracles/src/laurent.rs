//! Exact Laurent polynomials in two variables `q`, `t` with integer
//! coefficients — just enough arithmetic for the matrix oracle.

use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial `sum c · q^a t^b`, keyed by `(a, b)`.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<(i32, i32), i128>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent::default()
    }

    pub fn one() -> Laurent {
        Laurent::monomial(1, 0, 0)
    }

    /// `coeff · q^qe t^te`.
    pub fn monomial(coeff: i128, qe: i32, te: i32) -> Laurent {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((qe, te), coeff);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)) == Some(&1)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&key, &c) in &other.terms {
            let entry = out.terms.entry(key).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(&key);
            }
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut terms: BTreeMap<(i32, i32), i128> = BTreeMap::new();
        for (&(qa, ta), &ca) in &self.terms {
            for (&(qb, tb), &cb) in &other.terms {
                let key = (qa + qb, ta + tb);
                let entry = terms.entry(key).or_insert(0);
                *entry += ca * cb;
                if *entry == 0 {
                    terms.remove(&key);
                }
            }
        }
        Laurent { terms }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(qe, te), &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if qe != 0 {
                write!(f, "*q^{qe}")?;
            }
            if te != 0 {
                write!(f, "*t^{te}")?;
            }
        }
        Ok(())
    }
}
