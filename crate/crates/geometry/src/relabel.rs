use crate::dogleg::dogleg_connect;
use crate::error::GeoError;
use crate::pl::PLBraid;
use crate::point::Point;

/// Transports a geometric braid over the start set X to one over Y.
///
/// `targets[k]` is the new start point for strand `k`.  The image braid
/// runs a dogleg connection h from Y back to X, then `f`, then h
/// reversed — so the map is a group isomorphism between the braids based
/// at X and those based at Y: composition is preserved because the
/// middle connections cancel, and the construction is undone by the
/// reverse relabeling.
pub fn relabel_isomorphism(f: &PLBraid, targets: &[Point]) -> Result<PLBraid, GeoError> {
    if targets.len() != f.size() {
        return Err(GeoError::CardinalityMismatch {
            left: f.size(),
            right: targets.len(),
        });
    }
    let starts: Vec<Point> = f.strands().iter().map(|s| s.start().clone()).collect();
    let inward = dogleg_connect(targets, &starts)?;
    inward.concat(f)?.concat(&inward.reversed())
}
