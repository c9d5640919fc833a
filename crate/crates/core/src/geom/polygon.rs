use num_traits::Zero;

use super::{cross, on_segment, orientation, segments_intersect, Intersection, Orientation, Point, Rational};
use crate::error::GeomError;

/// Simple polygon with counter-clockwise vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
}

impl SimplePolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    /// Twice the signed area; positive for every valid polygon.
    pub fn area2(&self) -> Rational {
        signed_area2(&self.vertices)
    }

    /// Boundary edges as `(i, i + 1 mod n)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).map(move |i| (i, (i + 1) % n))
    }
}

/// Outer boundary (counter-clockwise) minus the open interiors of holes (clockwise).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolygonWithHoles {
    outer: SimplePolygon,
    holes: Vec<Vec<Point>>,
}

impl PolygonWithHoles {
    pub fn outer(&self) -> &SimplePolygon {
        &self.outer
    }

    /// Hole rings in clockwise order.
    pub fn holes(&self) -> &[Vec<Point>] {
        &self.holes
    }

    pub fn vertex_count(&self) -> usize {
        self.outer.len() + self.holes.iter().map(Vec::len).sum::<usize>()
    }

    /// All rings, outer first; vertex indices follow this order.
    pub fn rings(&self) -> Vec<&[Point]> {
        let mut out: Vec<&[Point]> = vec![self.outer.vertices()];
        out.extend(self.holes.iter().map(Vec::as_slice));
        out
    }

    /// Vertices in global index order.
    pub fn vertices(&self) -> Vec<Point> {
        self.rings().into_iter().flatten().cloned().collect()
    }
}

impl From<SimplePolygon> for PolygonWithHoles {
    fn from(outer: SimplePolygon) -> Self {
        PolygonWithHoles {
            outer,
            holes: Vec::new(),
        }
    }
}

pub fn signed_area2(ring: &[Point]) -> Rational {
    let n = ring.len();
    let mut s = Rational::zero();
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        s += &a.x * &b.y - &b.x * &a.y;
    }
    s
}

/// Checks a vertex cycle and returns it as a counter-clockwise polygon.
pub fn validate_simple_polygon(vertices: Vec<Point>) -> Result<SimplePolygon, GeomError> {
    let mut vertices = vertices;
    check_ring(&vertices)?;
    if signed_area2(&vertices) < Rational::zero() {
        vertices.reverse();
    }
    Ok(SimplePolygon { vertices })
}

fn check_ring(v: &[Point]) -> Result<(), GeomError> {
    let n = v.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| v[a].cmp(&v[b]));
    for w in order.windows(2) {
        if v[w[0]] == v[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(GeomError::RepeatedVertex(a, b));
        }
    }
    for i in 0..n {
        let prev = &v[(i + n - 1) % n];
        let next = &v[(i + 1) % n];
        if orientation(prev, &v[i], next) == Orientation::Collinear {
            return Err(GeomError::CollinearRun(i));
        }
    }
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let k = segments_intersect(&v[i], &v[(i + 1) % n], &v[j], &v[(j + 1) % n]);
            if k != Intersection::None {
                return Err(GeomError::SelfIntersection(i, j));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    OnBoundary,
    Outside,
}

/// Locates `p` against a closed ring of either orientation.
pub fn locate_in_ring(p: &Point, ring: &[Point]) -> Location {
    let n = ring.len();
    let mut winding = 0i32;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        if on_segment(a, b, p) {
            return Location::OnBoundary;
        }
        if a.y <= p.y {
            if b.y > p.y && cross(a, b, p) > Rational::zero() {
                winding += 1;
            }
        } else if b.y <= p.y && cross(a, b, p) < Rational::zero() {
            winding -= 1;
        }
    }
    if winding != 0 {
        Location::Inside
    } else {
        Location::Outside
    }
}

pub fn point_in_polygon(p: &Point, poly: &SimplePolygon) -> Location {
    locate_in_ring(p, poly.vertices())
}

/// Validates the outer ring and every hole; holes come back clockwise.
pub fn validate_polygon_with_holes(outer: Vec<Point>, holes: Vec<Vec<Point>>) -> Result<PolygonWithHoles, GeomError> {
    let outer = validate_simple_polygon(outer)?;
    let mut rings: Vec<Vec<Point>> = Vec::with_capacity(holes.len());
    for (h, ring) in holes.into_iter().enumerate() {
        let mut ring = validate_simple_polygon(ring).map_err(|e| GeomError::InvalidHole(h, Box::new(e)))?;
        ring.vertices.reverse();
        let ring = ring.vertices;
        for p in &ring {
            if point_in_polygon(p, &outer) != Location::Inside {
                return Err(GeomError::HoleNotInside(h));
            }
        }
        if rings_touch(outer.vertices(), &ring) {
            return Err(GeomError::HoleNotInside(h));
        }
        for (g, other) in rings.iter().enumerate() {
            let nested = locate_in_ring(&ring[0], other) != Location::Outside
                || locate_in_ring(&other[0], &ring) != Location::Outside;
            if nested || rings_touch(other, &ring) {
                return Err(GeomError::HolesIntersect(g, h));
            }
        }
        rings.push(ring);
    }
    Ok(PolygonWithHoles { outer, holes: rings })
}

fn rings_touch(a: &[Point], b: &[Point]) -> bool {
    let (n, m) = (a.len(), b.len());
    (0..n).any(|i| {
        (0..m).any(|j| segments_intersect(&a[i], &a[(i + 1) % n], &b[j], &b[(j + 1) % m]) != Intersection::None)
    })
}
