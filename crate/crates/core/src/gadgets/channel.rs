//! The two corridor gadgets on an exact hexagonal lattice.
//!
//! Channels are described in lattice coordinates `(u, v)` with basis vectors
//! at 60 degrees. [`to_plane`] maps them to the plane by `x = 2u + v`,
//! `y = 7v / 4`, a rational stand-in for the `sqrt(3)` of a regular grid.
//! The map is affine, so visibility does not depend on it.

use std::sync::OnceLock;

use crate::geom::{int, ratio, validate_simple_polygon, Point, Rational, SimplePolygon};
use crate::visibility::{visibility_graph, VisGraph};

/// Lattice distance between the two join centres of a channel.
pub(crate) const LENGTH: i64 = 12;

pub(crate) type Lattice = (Rational, Rational);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelKind {
    Vertex,
    Edge,
}

impl ChannelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelKind::Vertex => "vertex",
            ChannelKind::Edge => "edge",
        }
    }

    /// Vertex names in polygon order.
    pub(crate) fn names(self) -> &'static [&'static str] {
        match self {
            ChannelKind::Vertex => &["a1", "b1", "b2", "b3", "c", "a3", "a2"],
            ChannelKind::Edge => &["a1", "d1", "d2", "b1", "b2", "b3", "c2", "c1", "a3", "a2"],
        }
    }

    /// The channel without its two join triangles, as polygon positions.
    pub(crate) fn corridor(self) -> &'static [usize] {
        match self {
            ChannelKind::Vertex => &[0, 1, 3, 4, 5],
            ChannelKind::Edge => &[0, 1, 2, 3, 5, 6, 7, 8],
        }
    }

    /// Positions of `a1 a2 a3` and `b1 b2 b3`.
    pub(crate) fn joins(self) -> ([usize; 3], [usize; 3]) {
        match self {
            ChannelKind::Vertex => ([0, 6, 5], [1, 2, 3]),
            ChannelKind::Edge => ([0, 9, 8], [3, 4, 5]),
        }
    }

    pub(crate) fn lattice(self) -> Vec<Lattice> {
        match self {
            ChannelKind::Vertex => vertex_lattice(),
            ChannelKind::Edge => edge_lattice(),
        }
    }

    pub(crate) fn graph(self) -> &'static VisGraph {
        match self {
            ChannelKind::Vertex => vertex_channel_graph(),
            ChannelKind::Edge => edge_channel_graph(),
        }
    }
}

pub(crate) fn to_plane(p: &Lattice) -> Point {
    Point::new(int(2) * &p.0 + &p.1, ratio(7, 4) * &p.1)
}

fn lat(u: i64, v: i64) -> Lattice {
    (int(u), int(v))
}

/// Corridor point at distance `x` along the channel and height fraction `f`
/// between its lower (0) and upper (1) side.
fn along(x: Rational, f: Rational) -> Lattice {
    let v = int(2) * f - int(1);
    (x - &v / int(2), v)
}

/// Same, with `x` measured in the units of the edge-channel drawing, where
/// the two joins sit at 1 and 7.
fn drawn(x: Rational, f: Rational) -> Lattice {
    along(ratio(1, 2) + (x - int(1)) * ratio(LENGTH - 1, 6), f)
}

fn joins() -> Vec<Lattice> {
    vec![
        lat(1, -1),
        lat(-1, 0),
        lat(0, 1),
        lat(LENGTH, -1),
        lat(LENGTH + 1, 0),
        lat(LENGTH - 1, 1),
    ]
}

fn vertex_lattice() -> Vec<Lattice> {
    let j = joins();
    let c = along(int(LENGTH / 2), ratio(1, 3));
    vec![
        j[0].clone(),
        j[3].clone(),
        j[4].clone(),
        j[5].clone(),
        c,
        j[2].clone(),
        j[1].clone(),
    ]
}

fn edge_lattice() -> Vec<Lattice> {
    let j = joins();
    let c1 = drawn(ratio(27, 10), ratio(39, 100));
    let c2 = drawn(int(3), ratio(81, 200));
    let d1 = drawn(ratio(22, 5), ratio(39, 100));
    let d2 = drawn(ratio(22, 5), ratio(13, 25));
    vec![
        j[0].clone(),
        d1,
        d2,
        j[3].clone(),
        j[4].clone(),
        j[5].clone(),
        c2,
        c1,
        j[2].clone(),
        j[1].clone(),
    ]
}

fn polygon(kind: ChannelKind) -> SimplePolygon {
    let pts: Vec<Point> = kind.lattice().iter().map(to_plane).collect();
    let poly = validate_simple_polygon(pts.clone()).expect("channel constants form a simple polygon");
    assert_eq!(
        poly.vertices(),
        pts.as_slice(),
        "channel constants are counter-clockwise"
    );
    poly
}

/// The 7-vertex channel carrying one colour triple between its joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexChannel {
    pub polygon: SimplePolygon,
    /// Positions of `a1, a2, a3`.
    pub a: [usize; 3],
    /// Positions of `b1, b2, b3`.
    pub b: [usize; 3],
    pub c: usize,
}

/// The 10-vertex channel that forces the two flag colours apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeChannel {
    pub polygon: SimplePolygon,
    pub a: [usize; 3],
    pub b: [usize; 3],
    /// Positions of `c1, c2`.
    pub c: [usize; 2],
    /// Positions of `d1, d2`.
    pub d: [usize; 2],
}

pub fn vertex_channel() -> VertexChannel {
    let (a, b) = ChannelKind::Vertex.joins();
    VertexChannel {
        polygon: polygon(ChannelKind::Vertex),
        a,
        b,
        c: 4,
    }
}

pub fn edge_channel() -> EdgeChannel {
    let (a, b) = ChannelKind::Edge.joins();
    EdgeChannel {
        polygon: polygon(ChannelKind::Edge),
        a,
        b,
        c: [7, 6],
        d: [1, 2],
    }
}

pub fn vertex_channel_graph() -> &'static VisGraph {
    static G: OnceLock<VisGraph> = OnceLock::new();
    G.get_or_init(|| visibility_graph(&vertex_channel().polygon))
}

pub fn edge_channel_graph() -> &'static VisGraph {
    static G: OnceLock<VisGraph> = OnceLock::new();
    G.get_or_init(|| visibility_graph(&edge_channel().polygon))
}
