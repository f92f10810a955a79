use std::collections::BTreeSet;

use num::{Signed, Zero};

use crate::error::GeoError;
use crate::point::{Point, Rat};

/// One strand: a piecewise-linear path in ℂ × [0,1], stored as
/// breakpoints `(t, position)` with `t` strictly increasing from 0 to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    breakpoints: Vec<(Rat, Point)>,
}

impl Strand {
    pub fn new(breakpoints: Vec<(Rat, Point)>) -> Result<Self, GeoError> {
        if breakpoints.len() < 2 {
            return Err(GeoError::InvalidBraid(
                "a strand needs breakpoints at least at t=0 and t=1".into(),
            ));
        }
        if !breakpoints.first().unwrap().0.is_zero() {
            return Err(GeoError::InvalidBraid("a strand must begin at t=0".into()));
        }
        if breakpoints.last().unwrap().0 != Rat::from_integer(1.into()) {
            return Err(GeoError::InvalidBraid("a strand must end at t=1".into()));
        }
        if !breakpoints.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(GeoError::InvalidBraid(
                "breakpoint times must be strictly increasing".into(),
            ));
        }
        Ok(Strand { breakpoints })
    }

    /// A strand standing still at one point.
    pub fn vertical(at: Point) -> Self {
        Strand {
            breakpoints: vec![
                (Rat::zero(), at.clone()),
                (Rat::from_integer(1.into()), at),
            ],
        }
    }

    pub fn breakpoints(&self) -> &[(Rat, Point)] {
        &self.breakpoints
    }

    /// The start label: the position at t=0.
    pub fn start(&self) -> &Point {
        &self.breakpoints.first().unwrap().1
    }

    /// The position at t=1.
    pub fn end(&self) -> &Point {
        &self.breakpoints.last().unwrap().1
    }

    /// The exact position at any time in `[0,1]`.
    pub fn position_at(&self, t: &Rat) -> Point {
        debug_assert!(!t.is_negative() && *t <= Rat::from_integer(1.into()));
        let seg = self
            .breakpoints
            .windows(2)
            .find(|w| *t <= w[1].0)
            .expect("t within [0,1] lies in some segment");
        let (t0, p0) = &seg[0];
        let (t1, p1) = &seg[1];
        if t < t0 {
            // Only reachable for t = 0 via the first segment.
            return p0.clone();
        }
        let lambda = (t - t0) / (t1 - t0);
        p0.lerp(p1, &lambda)
    }

    /// The same path traversed backwards in time.
    pub fn reversed(&self) -> Strand {
        let one = Rat::from_integer(1.into());
        Strand {
            breakpoints: self
                .breakpoints
                .iter()
                .rev()
                .map(|(t, p)| (&one - t, p.clone()))
                .collect(),
        }
    }
}

/// A finite family of pairwise-disjoint strands: a geometric braid from
/// its set of start points to its set of end points.
///
/// Construction certifies exactly — with rational arithmetic and no
/// floating point — that distinct strands never occupy the same point at
/// the same time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLBraid {
    strands: Vec<Strand>,
}

impl PLBraid {
    pub fn new(strands: Vec<Strand>) -> Result<Self, GeoError> {
        if strands.is_empty() {
            return Err(GeoError::InvalidBraid("no strands".into()));
        }
        for (i, a) in strands.iter().enumerate() {
            for (j, b) in strands.iter().enumerate().skip(i + 1) {
                if a.start() == b.start() {
                    return Err(GeoError::InvalidBraid(format!(
                        "strands {i} and {j} share the start point {}",
                        a.start()
                    )));
                }
                if a.end() == b.end() {
                    return Err(GeoError::InvalidBraid(format!(
                        "strands {i} and {j} share the end point {}",
                        a.end()
                    )));
                }
            }
        }
        let braid = PLBraid { strands };
        braid.certify_disjoint()?;
        Ok(braid)
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn size(&self) -> usize {
        self.strands.len()
    }

    /// All breakpoint times of all strands, sorted and deduplicated;
    /// strands are simultaneously linear between consecutive entries.
    pub fn time_grid(&self) -> Vec<Rat> {
        let set: BTreeSet<Rat> = self
            .strands
            .iter()
            .flat_map(|s| s.breakpoints().iter().map(|(t, _)| t.clone()))
            .collect();
        set.into_iter().collect()
    }

    /// The same family traversed backwards in time.
    pub fn reversed(&self) -> PLBraid {
        // Reversal permutes nothing and preserves disjointness exactly.
        PLBraid {
            strands: self.strands.iter().map(Strand::reversed).collect(),
        }
    }

    /// Concatenation in time: `self` compressed into `[0, 1/2]`, then
    /// `other` into `[1/2, 1]`.  Each strand continues through the
    /// strand of `other` that starts where it ends.
    pub fn concat(&self, other: &PLBraid) -> Result<PLBraid, GeoError> {
        if self.size() != other.size() {
            return Err(GeoError::CardinalityMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let two = Rat::from_integer(2.into());
        let mut strands = Vec::with_capacity(self.size());
        for first in &self.strands {
            let second = other
                .strands
                .iter()
                .find(|s| s.start() == first.end())
                .ok_or_else(|| {
                    GeoError::InvalidBraid(format!(
                        "no strand of the second braid starts at {}",
                        first.end()
                    ))
                })?;
            let mut breakpoints: Vec<(Rat, Point)> = first
                .breakpoints()
                .iter()
                .map(|(t, p)| (t / &two, p.clone()))
                .collect();
            for (t, p) in second.breakpoints().iter().skip(1) {
                breakpoints.push(((t + Rat::from_integer(1.into())) / &two, p.clone()));
            }
            strands.push(Strand::new(breakpoints)?);
        }
        PLBraid::new(strands)
    }

    /// Verifies the exact pairwise disjointness certificate, reporting
    /// the first touching pair and time otherwise.
    pub fn certify_disjoint(&self) -> Result<(), GeoError> {
        for i in 0..self.strands.len() {
            for j in i + 1..self.strands.len() {
                if let Some(time) = touch_time(&self.strands[i], &self.strands[j]) {
                    return Err(GeoError::StrandsTouch {
                        first: i,
                        second: j,
                        time,
                    });
                }
            }
        }
        Ok(())
    }
}

/// The first time two strands occupy the same point, if any.
///
/// On each interval where both strands are linear their difference is a
/// linear path `d(t)` in the plane; it passes through the origin exactly
/// when the endpoint vectors `d(t0)` and `d(t1)` are parallel with
/// opposite orientation (or one of them is zero).
pub fn touch_time(a: &Strand, b: &Strand) -> Option<Rat> {
    let times: BTreeSet<Rat> = a
        .breakpoints()
        .iter()
        .chain(b.breakpoints())
        .map(|(t, _)| t.clone())
        .collect();
    let times: Vec<Rat> = times.into_iter().collect();
    for window in times.windows(2) {
        let (t0, t1) = (&window[0], &window[1]);
        let pa0 = a.position_at(t0);
        let pb0 = b.position_at(t0);
        let dx0 = &pa0.re - &pb0.re;
        let dy0 = &pa0.im - &pb0.im;
        if dx0.is_zero() && dy0.is_zero() {
            return Some(t0.clone());
        }
        let pa1 = a.position_at(t1);
        let pb1 = b.position_at(t1);
        let dx1 = &pa1.re - &pb1.re;
        let dy1 = &pa1.im - &pb1.im;
        if dx1.is_zero() && dy1.is_zero() {
            return Some(t1.clone());
        }
        let cross = &dx0 * &dy1 - &dy0 * &dx1;
        let dot = &dx0 * &dx1 + &dy0 * &dy1;
        if cross.is_zero() && dot.is_negative() {
            // d crosses the origin strictly inside the interval; solve
            // d(t0) + lambda (d(t1) - d(t0)) = 0 in either coordinate.
            let lambda = if dx0 != dx1 {
                &dx0 / (&dx0 - &dx1)
            } else {
                &dy0 / (&dy0 - &dy1)
            };
            return Some(t0 + lambda * (t1 - t0));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::rat;

    /// Builds a strand from `(t_numer, t_denom, x, y)` breakpoints.
    fn strand(points: &[(i64, i64, i64, i64)]) -> Strand {
        Strand::new(
            points
                .iter()
                .map(|&(tn, td, x, y)| (rat(tn, td), Point::integer(x, y)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn vertical_families_are_disjoint() {
        let braid = PLBraid::new(vec![
            Strand::vertical(Point::real(0)),
            Strand::vertical(Point::real(1)),
            Strand::vertical(Point::integer(0, 1)),
        ])
        .unwrap();
        assert!(braid.certify_disjoint().is_ok());
    }

    #[test]
    fn crossing_segments_are_caught_with_the_exact_time() {
        let a = strand(&[(0, 1, 0, 0), (1, 1, 2, 0)]);
        let b = strand(&[(0, 1, 2, 0), (1, 1, 0, 0)]);
        match PLBraid::new(vec![a, b]) {
            Err(GeoError::StrandsTouch { first: 0, second: 1, time }) => {
                assert_eq!(time, rat(1, 2));
            }
            other => panic!("expected a touch, got {other:?}"),
        }
    }

    #[test]
    fn grazing_contact_at_a_breakpoint_is_caught() {
        // b dips to touch a's path exactly at t=1/2 and retreats.
        let a = Strand::vertical(Point::real(0));
        let b = strand(&[(0, 1, 1, 0), (1, 2, 0, 0), (1, 1, 1, 0)]);
        match PLBraid::new(vec![a, b]) {
            Err(GeoError::StrandsTouch { time, .. }) => assert_eq!(time, rat(1, 2)),
            other => panic!("expected a touch, got {other:?}"),
        }
    }

    #[test]
    fn parallel_passes_at_different_depths_are_disjoint() {
        // Same real part for a whole interval, separated in the imaginary
        // direction.
        let a = strand(&[(0, 1, 0, 0), (1, 1, 0, 0)]);
        let b = strand(&[(0, 1, 0, 1), (1, 2, 0, 1), (1, 1, 1, 1)]);
        assert!(PLBraid::new(vec![a, b]).is_ok());
    }

    #[test]
    fn repeated_endpoints_are_rejected() {
        let a = strand(&[(0, 1, 0, 0), (1, 1, 1, 0)]);
        let b = strand(&[(0, 1, 1, 0), (1, 1, 1, 1)]);
        let c = strand(&[(0, 1, 2, 0), (1, 1, 1, 1)]);
        match PLBraid::new(vec![a, b, c]) {
            Err(GeoError::InvalidBraid(msg)) => assert!(msg.contains("end point")),
            other => panic!("expected invalid braid, got {other:?}"),
        }
    }

    #[test]
    fn position_interpolates_exactly() {
        let s = strand(&[(0, 1, 0, 0), (1, 2, 1, 1), (1, 1, 3, 0)]);
        assert_eq!(s.position_at(&rat(1, 4)), Point::new(rat(1, 2), rat(1, 2)));
        assert_eq!(s.position_at(&rat(3, 4)), Point::new(rat(2, 1), rat(1, 2)));
        assert_eq!(s.position_at(&rat(1, 2)), Point::integer(1, 1));
        let reversed = s.reversed();
        assert_eq!(reversed.position_at(&rat(1, 4)), s.position_at(&rat(3, 4)));
        assert_eq!(reversed.start(), s.end());
    }
}
