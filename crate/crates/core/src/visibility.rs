//! Vertex-to-vertex visibility inside closed polygonal regions.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::bits::Bits;
use crate::exec::Exec;
use crate::geom::{
    locate_in_ring, segments_intersect, Intersection, Location, Point, PolygonWithHoles, Rational, SimplePolygon,
};

/// Undirected graph on polygon vertices with boundary edges marked.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VisGraph {
    rows: Vec<Bits>,
    boundary: BTreeSet<(usize, usize)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl VisGraph {
    pub fn new(n: usize) -> Self {
        VisGraph {
            rows: vec![Bits::new(n); n],
            boundary: BTreeSet::new(),
        }
    }

    /// Builds a graph from edge and boundary lists. Boundary edges are added
    /// to the adjacency as well.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], boundary: &[(usize, usize)]) -> Self {
        let mut g = VisGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        for &(u, v) in boundary {
            g.add_boundary_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self loop at {u}");
        self.rows[u].set(v);
        self.rows[v].set(u);
    }

    pub fn add_boundary_edge(&mut self, u: usize, v: usize) {
        self.add_edge(u, v);
        self.boundary.insert(key(u, v));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn is_boundary(&self, u: usize, v: usize) -> bool {
        self.boundary.contains(&key(u, v))
    }

    pub fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bits::count).sum::<usize>() / 2
    }

    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        self.boundary.iter().copied().collect()
    }

    /// Subgraph induced on `verts`; vertex `k` of the result is `verts[k]`.
    pub fn induced(&self, verts: &[usize]) -> VisGraph {
        let mut g = VisGraph::new(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.is_boundary(u, v) {
                    g.add_boundary_edge(a, b);
                } else if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub u: usize,
    pub v: usize,
}

struct Edge {
    a: usize,
    b: usize,
    xlo: Rational,
    xhi: Rational,
    ylo: Rational,
    yhi: Rational,
}

/// Closed outer ring minus open hole rings, flattened for visibility queries.
struct Region<'a> {
    rings: Vec<&'a [Point]>,
    pts: Vec<&'a Point>,
    edges: Vec<Edge>,
    boundary: Vec<(usize, usize)>,
}

impl<'a> Region<'a> {
    fn new(rings: Vec<&'a [Point]>) -> Self {
        let mut pts = Vec::new();
        let mut edges = Vec::new();
        let mut boundary = Vec::new();
        for ring in &rings {
            let base = pts.len();
            let m = ring.len();
            pts.extend(ring.iter());
            for k in 0..m {
                let (a, b) = (base + k, base + (k + 1) % m);
                let (pa, pb) = (&ring[k], &ring[(k + 1) % m]);
                edges.push(Edge {
                    a,
                    b,
                    xlo: pa.x.clone().min(pb.x.clone()),
                    xhi: pa.x.clone().max(pb.x.clone()),
                    ylo: pa.y.clone().min(pb.y.clone()),
                    yhi: pa.y.clone().max(pb.y.clone()),
                });
                boundary.push(key(a, b));
            }
        }
        Region {
            rings,
            pts,
            edges,
            boundary,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        if locate_in_ring(p, self.rings[0]) == Location::Outside {
            return false;
        }
        self.rings[1..].iter().all(|h| locate_in_ring(p, h) != Location::Inside)
    }

    fn visible(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let p = self.pts[i];
        let q = self.pts[j];
        let (sxlo, sxhi) = if p.x <= q.x { (&p.x, &q.x) } else { (&q.x, &p.x) };
        let (sylo, syhi) = if p.y <= q.y { (&p.y, &q.y) } else { (&q.y, &p.y) };
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        let zero = Rational::zero();
        let one = Rational::one();
        let mut params = vec![zero.clone(), one.clone()];
        for e in &self.edges {
            if e.xhi < *sxlo || e.xlo > *sxhi || e.yhi < *sylo || e.ylo > *syhi {
                continue;
            }
            let a = self.pts[e.a];
            let b = self.pts[e.b];
            let ex = &b.x - &a.x;
            let ey = &b.y - &a.y;
            let apx = &a.x - &p.x;
            let apy = &a.y - &p.y;
            let den = &dx * &ey - &dy * &ex;
            if den.is_zero() {
                if !(&apx * &dy - &apy * &dx).is_zero() {
                    continue;
                }
                // collinear: keep the projections of the edge endpoints
                let dd = &dx * &dx + &dy * &dy;
                for c in [a, b] {
                    let t = ((&c.x - &p.x) * &dx + (&c.y - &p.y) * &dy) / &dd;
                    if t > zero && t < one {
                        params.push(t);
                    }
                }
                continue;
            }
            let t = (&apx * &ey - &apy * &ex) / &den;
            if t < zero || t > one {
                continue;
            }
            let s = (&apx * &dy - &apy * &dx) / &den;
            if s < zero || s > one {
                continue;
            }
            if t > zero && t < one && s > zero && s < one {
                return false;
            }
            if t > zero && t < one {
                params.push(t);
            }
        }
        params.sort();
        params.dedup();
        let two = &one + &one;
        params.windows(2).all(|w| {
            let mid = (&w[0] + &w[1]) / &two;
            self.contains(&p.lerp(q, &mid))
        })
    }

    fn graph(&self, exec: Exec) -> VisGraph {
        let n = self.pts.len();
        let boundary: BTreeSet<(usize, usize)> = self.boundary.iter().copied().collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|p| !boundary.contains(p))
            .collect();
        let seen = exec.map(&pairs, |&(i, j)| self.visible(i, j));
        let mut g = VisGraph::new(n);
        for &(u, v) in &self.boundary {
            g.add_boundary_edge(u, v);
        }
        for (&(i, j), s) in pairs.iter().zip(seen) {
            if s {
                g.add_edge(i, j);
            }
        }
        g
    }
}

/// Whether the closed segment between vertices `i` and `j` stays in the closed polygon.
pub fn visible(poly: &SimplePolygon, i: usize, j: usize) -> bool {
    Region::new(vec![poly.vertices()]).visible(i, j)
}

/// Visibility with holes; vertex indices run over the outer ring, then each hole.
pub fn visible_with_holes(pwh: &PolygonWithHoles, i: usize, j: usize) -> bool {
    Region::new(pwh.rings()).visible(i, j)
}

/// Tests a batch of vertex pairs, sharing the edge setup between them.
pub fn visible_pairs(pwh: &PolygonWithHoles, pairs: &[(usize, usize)], exec: Exec) -> Vec<bool> {
    let region = Region::new(pwh.rings());
    exec.map(pairs, |&(i, j)| region.visible(i, j))
}

pub fn visibility_graph(poly: &SimplePolygon) -> VisGraph {
    visibility_graph_with(poly, Exec::default())
}

pub fn visibility_graph_with(poly: &SimplePolygon, exec: Exec) -> VisGraph {
    Region::new(vec![poly.vertices()]).graph(exec)
}

pub fn visibility_graph_with_holes(pwh: &PolygonWithHoles) -> VisGraph {
    visibility_graph_with_holes_with(pwh, Exec::default())
}

pub fn visibility_graph_with_holes_with(pwh: &PolygonWithHoles, exec: Exec) -> VisGraph {
    Region::new(pwh.rings()).graph(exec)
}

/// Non-boundary edges of `g`, sorted.
pub fn chords(g: &VisGraph) -> Vec<Chord> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| !g.is_boundary(u, v))
        .map(|(u, v)| Chord { u, v })
        .collect()
}

/// Pairs of chords whose open segments cross, sorted.
pub fn crossing_chord_pairs(vertices: &[Point], g: &VisGraph) -> Vec<(Chord, Chord)> {
    let cs = chords(g);
    let mut out = Vec::new();
    for (k, a) in cs.iter().enumerate() {
        for b in &cs[k + 1..] {
            let kind = segments_intersect(&vertices[a.u], &vertices[a.v], &vertices[b.u], &vertices[b.v]);
            if kind == Intersection::ProperCross {
                out.push((*a, *b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{validate_polygon_with_holes, validate_simple_polygon};

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    /// Figure-1 polygon re-indexed so that A..F are 0..5 in counter-clockwise order.
    fn figure1() -> SimplePolygon {
        let p = validate_simple_polygon(pts(&[(-5, 0), (2, 1), (9, 0), (9, 3), (2, 2), (-5, 3)])).unwrap();
        assert_eq!(p.vertex(0), &Point::int(-5, 0));
        p
    }

    #[test]
    fn convex_is_complete() {
        let hexagon = validate_simple_polygon(pts(&[(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)])).unwrap();
        let g = visibility_graph(&hexagon);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.boundary_edges().len(), 6);
    }

    #[test]
    fn figure1_edges() {
        // counter-clockwise order: A F E D C B
        let p = figure1();
        let g = visibility_graph(&p);
        assert_eq!(g.edge_count(), 13);
        let (a, f, e, d, c, b) = (0, 1, 2, 3, 4, 5);
        assert!(!visible(&p, a, e));
        assert!(visible(&p, d, f));
        let mut want: Vec<(usize, usize)> = [(a, c), (a, d), (b, e), (b, f), (c, e), (c, f), (d, f)]
            .iter()
            .map(|&(u, v)| key(u, v))
            .collect();
        want.sort();
        let got: Vec<(usize, usize)> = chords(&g).iter().map(|c| (c.u, c.v)).collect();
        assert_eq!(got, want);
        let crossing = crossing_chord_pairs(p.vertices(), &g);
        for ch in chords(&g) {
            assert!(crossing.iter().any(|(x, y)| *x == ch || *y == ch));
        }
    }

    #[test]
    fn chord_examples() {
        let tri = validate_simple_polygon(pts(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert!(chords(&visibility_graph(&tri)).is_empty());
        let sq = validate_simple_polygon(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        let g = visibility_graph(&sq);
        assert_eq!(chords(&g), vec![Chord { u: 0, v: 2 }, Chord { u: 1, v: 3 }]);
        assert_eq!(crossing_chord_pairs(sq.vertices(), &g).len(), 1);
    }

    #[test]
    fn grazing_through_vertex() {
        let p = validate_simple_polygon(pts(&[(0, 0), (4, 0), (4, 4), (2, 2), (0, 4)])).unwrap();
        // (0,0)-(4,4) passes exactly through (2,2) and stays on the closed region
        assert!(visible(&p, 0, 2));
        // (4,0)-(0,4) also touches (2,2)
        assert!(visible(&p, 1, 4));
        // (0,4)-(4,4) leaves through the dent
        assert!(!visible(&p, 2, 4));
    }

    #[test]
    fn along_boundary() {
        let p = validate_simple_polygon(pts(&[(0, 0), (2, 0), (2, 1), (4, 1), (4, 3), (-1, 3), (-1, 1)])).unwrap();
        let at = |x, y| p.vertices().iter().position(|v| *v == Point::int(x, y)).unwrap();
        // runs through (2,1) and then along the edge to (4,1)
        assert!(visible(&p, at(-1, 1), at(4, 1)));
        // clips the corner at (2,1)
        assert!(!visible(&p, at(2, 0), at(4, 3)));
    }

    #[test]
    fn holes() {
        let outer = pts(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        let hole = pts(&[(4, 4), (6, 4), (6, 6), (4, 6)]);
        let pwh = validate_polygon_with_holes(outer, vec![hole]).unwrap();
        assert!(visible_with_holes(&pwh, 0, 1));
        assert!(!visible_with_holes(&pwh, 0, 2));
        let g = visibility_graph_with_holes(&pwh);
        assert_eq!(g.n(), 8);
        assert_eq!(g.boundary_edges().len(), 8);
        assert!(!g.has_edge(1, 3));
        // hole edges seen from outside; the far side of the hole is blocked
        // holes are stored clockwise: (4,6) (6,6) (6,4) (4,4)
        assert!(g.has_edge(0, 7));
        assert!(g.has_edge(0, 6));
        assert!(!g.has_edge(0, 5));
    }

    #[test]
    fn exec_modes_agree() {
        let p = crate::geom::random_simple_polygon(12, 7).unwrap();
        assert_eq!(
            visibility_graph_with(&p, Exec::Sequential),
            visibility_graph_with(&p, Exec::Parallel)
        );
    }
}
