use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    orientation, segments_intersect, validate_simple_polygon, Intersection, Orientation, Point, SimplePolygon,
};
use crate::error::GeomError;

const ATTEMPTS: usize = 256;

/// Deterministic random simple polygon on `n` lattice points, no three collinear.
///
/// Points are drawn from a `3n x 3n` box and joined in draw order; crossing
/// edge pairs are removed by 2-opt reversal. Samples that end up with touching
/// edges are thrown away and redrawn.
pub fn random_simple_polygon(n: usize, seed: u64) -> Result<SimplePolygon, GeomError> {
    generate(n, seed, true)
}

/// Like [`random_simple_polygon`] but allows collinear vertex triples, so
/// sightlines may run through vertices and along edges.
pub fn random_lattice_polygon(n: usize, seed: u64) -> Result<SimplePolygon, GeomError> {
    generate(n, seed, false)
}

fn generate(n: usize, seed: u64, general: bool) -> Result<SimplePolygon, GeomError> {
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = (3 * n) as i64;
    for _ in 0..ATTEMPTS {
        let mut seen = BTreeSet::new();
        let mut pts: Vec<Point> = Vec::with_capacity(n);
        let mut draws = 0;
        while pts.len() < n && draws < 100 * n {
            draws += 1;
            let p = (rng.random_range(0..side), rng.random_range(0..side));
            let q = Point::int(p.0, p.1);
            if seen.contains(&p) || (general && collinear_with_any(&pts, &q)) {
                continue;
            }
            seen.insert(p);
            pts.push(q);
        }
        if pts.len() < n {
            continue;
        }
        if untangle(&mut pts) {
            if let Ok(poly) = validate_simple_polygon(pts) {
                return Ok(poly);
            }
        }
    }
    Err(GeomError::GenerationFailed(ATTEMPTS))
}

fn collinear_with_any(pts: &[Point], q: &Point) -> bool {
    (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| orientation(&pts[i], &pts[j], q) == Orientation::Collinear))
}

/// Applies 2-opt moves until no two edges cross. Returns false on a
/// degenerate contact that 2-opt cannot resolve.
fn untangle(pts: &mut [Point]) -> bool {
    let n = pts.len();
    // every move shortens the tour, so this only guards against bugs
    let limit = 100 * n * n;
    for _ in 0..limit {
        let mut found = None;
        'scan: for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                match segments_intersect(&pts[i], &pts[i + 1], &pts[j], &pts[(j + 1) % n]) {
                    Intersection::None => {}
                    Intersection::ProperCross => {
                        found = Some((i, j));
                        break 'scan;
                    }
                    _ => return false,
                }
            }
        }
        match found {
            None => return true,
            Some((i, j)) => pts[i + 1..=j].reverse(),
        }
    }
    false
}
