use num::Zero;

use crate::error::GeoError;
use crate::pl::{touch_time, PLBraid, Strand};
use crate::point::{half, Point, Rat};

/// Connects `start[k]` to `end[k]` for every `k` by two-segment doglegs
/// through midpoints at t=1/2, chosen greedily so all strands are
/// pairwise disjoint.
///
/// Each strand first tries the straight segment midpoint; if that
/// conflicts with an already-placed strand, integer grid points are tried
/// in a deterministic outward spiral.  Finitely many strands rule out
/// only finitely many grid points, so the greedy choice always succeeds.
pub fn dogleg_connect(start: &[Point], end: &[Point]) -> Result<PLBraid, GeoError> {
    if start.len() != end.len() {
        return Err(GeoError::CardinalityMismatch {
            left: start.len(),
            right: end.len(),
        });
    }
    if start.is_empty() {
        return Err(GeoError::InvalidBraid("no strands".into()));
    }
    let mut placed: Vec<Strand> = Vec::with_capacity(start.len());
    for (s, e) in start.iter().zip(end) {
        let strand = place_dogleg(s, e, &placed)?;
        placed.push(strand);
    }
    PLBraid::new(placed)
}

fn place_dogleg(start: &Point, end: &Point, placed: &[Strand]) -> Result<Strand, GeoError> {
    for midpoint in candidate_midpoints(start, end) {
        let strand = dogleg_strand(start, end, midpoint)?;
        if placed.iter().all(|other| touch_time(&strand, other).is_none()) {
            return Ok(strand);
        }
    }
    Err(GeoError::Internal(format!(
        "no disjoint dogleg midpoint found from {start} to {end} within the candidate budget"
    )))
}

fn dogleg_strand(start: &Point, end: &Point, midpoint: Point) -> Result<Strand, GeoError> {
    Strand::new(vec![
        (Rat::zero(), start.clone()),
        (half(), midpoint),
        (Rat::from_integer(1.into()), end.clone()),
    ])
}

/// The straight midpoint first, then the integer grid in growing square
/// rings, each ring in (x, y) order.  Capped far beyond what finitely
/// many obstacles can exclude.
fn candidate_midpoints(start: &Point, end: &Point) -> impl Iterator<Item = Point> {
    let straight = start.midpoint(end);
    let rings = (0i64..200).flat_map(|r| {
        let mut ring: Vec<(i64, i64)> = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                if x.abs().max(y.abs()) == r {
                    ring.push((x, y));
                }
            }
        }
        ring
    });
    std::iter::once(straight).chain(rings.map(|(x, y)| Point::integer(x, y)))
}
