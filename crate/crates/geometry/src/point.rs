use std::fmt;

use num::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::error::GeoError;

/// Exact rational scalar used for every coordinate and time value.
pub type Rat = BigRational;

/// A point of the complex plane with exact rational coordinates.
/// Ordering is lexicographic: real part first, then imaginary part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub re: Rat,
    pub im: Rat,
}

impl Point {
    pub fn new(re: Rat, im: Rat) -> Self {
        Point { re, im }
    }

    /// A grid point with integer coordinates.
    pub fn integer(x: i64, y: i64) -> Self {
        Point {
            re: Rat::from_integer(BigInt::from(x)),
            im: Rat::from_integer(BigInt::from(y)),
        }
    }

    /// A point on the real axis.
    pub fn real(x: i64) -> Self {
        Point::integer(x, 0)
    }

    /// `self + lambda · (other − self)`, the exact point `lambda` of the
    /// way along the segment to `other`.
    pub fn lerp(&self, other: &Point, lambda: &Rat) -> Point {
        Point {
            re: &self.re + lambda * (&other.re - &self.re),
            im: &self.im + lambda * (&other.im - &self.im),
        }
    }

    /// The midpoint of the segment to `other`.
    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &half())
    }
}

impl fmt::Display for Point {
    /// The file grammar for points: `<re>+<im>i` with each rational as
    /// `p/q` (reduced, positive denominator), e.g. `1/2+-3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", rat_string(&self.re), rat_string(&self.im))
    }
}

/// One half, exactly.
pub fn half() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2))
}

/// An exact rational from an integer pair (`denominator` nonzero).
pub fn rat(numerator: i64, denominator: i64) -> Rat {
    Rat::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Prints a rational as `p/q`, always with the denominator.
pub fn rat_string(value: &Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `p/q` (or a bare integer `p`).
pub fn parse_rat(text: &str) -> Result<Rat, GeoError> {
    let bad = || GeoError::InvalidNumber(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// Parses the `<re>+<im>i` point grammar.
pub fn parse_point(text: &str) -> Result<Point, GeoError> {
    let bad = || GeoError::InvalidNumber(text.to_string());
    let body = text.strip_suffix('i').ok_or_else(bad)?;
    let (re, im) = body.split_once('+').ok_or_else(bad)?;
    Ok(Point::new(parse_rat(re)?, parse_rat(im)?))
}

/// Fixed-point decimal rendering with up to three places, rounding half
/// away from zero — used only for drawing, never in predicates.
pub fn decimal(value: &Rat) -> String {
    let scaled = value * Rat::from_integer(BigInt::from(1000));
    let mut n = scaled.trunc().to_integer();
    let frac = scaled.fract().abs();
    if frac >= half() {
        if scaled.is_negative() {
            n -= 1;
        } else {
            n += 1;
        }
    }
    let sign = if n.is_negative() { "-" } else { "" };
    let n = n.abs();
    let whole = &n / BigInt::from(1000);
    let part = n % BigInt::from(1000);
    if part.is_zero() {
        return format!("{sign}{whole}");
    }
    let digits = format!("{part:03}");
    format!("{sign}{whole}.{}", digits.trim_end_matches('0'))
}
