use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::channel::{to_plane, ChannelKind, Lattice, LENGTH};
use super::hex::{direction, is_even_class, Node};
use super::{validate_embedding, HexEmbedding, InputGraph};
use crate::error::GadgetError;
use crate::exec::Exec;
use crate::geom::{int, signed_area2, validate_polygon_with_holes, Point, PolygonWithHoles, Rational};
use crate::visibility::{visibility_graph_with_holes_with, VisGraph};

/// One channel laid along a grid edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelPlacement {
    pub kind: ChannelKind,
    /// Node of the `a` join.
    pub from: Node,
    /// Node of the `b` join.
    pub to: Node,
    /// Polygon index of every channel vertex, in channel polygon order.
    pub vertices: Vec<usize>,
}

impl ChannelPlacement {
    /// Rotation in sixths of a turn and whether the channel is mirrored first.
    ///
    /// Vertex channels are rotated into directions 0, 1 or 2. Edge channels
    /// keep the frame of direction 1 and are mirrored about the vertical axis
    /// for direction 2.
    pub fn transform(&self) -> Option<(usize, bool)> {
        let k = direction(self.from, self.to)?;
        match (self.kind, k) {
            (ChannelKind::Vertex, 0..=2) => Some((k, false)),
            (ChannelKind::Edge, 1) => Some((1, false)),
            (ChannelKind::Edge, 2) => Some((2, true)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hard4hInstance {
    pub polygon: PolygonWithHoles,
    pub placements: Vec<ChannelPlacement>,
    /// Polygon indices of each triangle join, flag vertex first.
    pub joins: BTreeMap<Node, [usize; 3]>,
    pub flags: BTreeMap<Node, usize>,
}

fn rot((u, v): Lattice) -> Lattice {
    (-v.clone(), u + v)
}

/// Reflection of the lattice that becomes `x -> -x` after `rot`.
fn mirror((u, v): Lattice) -> Lattice {
    (&u + &v, -v)
}

fn centre(p: Node) -> Lattice {
    (int(LENGTH * p.0), int(LENGTH * p.1))
}

fn tips(p: Node) -> [Lattice; 3] {
    let t: [(i64, i64); 3] = if is_even_class(p) {
        [(-1, 0), (1, -1), (0, 1)]
    } else {
        [(1, 0), (-1, 1), (0, -1)]
    };
    let c = centre(p);
    t.map(|(a, b)| (&c.0 + int(a), &c.1 + int(b)))
}

/// Orients a grid edge for a channel of `kind`.
fn orient(kind: ChannelKind, a: Node, b: Node) -> Result<(Node, Node), GadgetError> {
    let k = direction(a, b).ok_or_else(|| GadgetError::EmbeddingInvalid(format!("{a:?}-{b:?} is not a grid edge")))?;
    let ok = match kind {
        ChannelKind::Vertex => k <= 2,
        ChannelKind::Edge => k == 1 || k == 2,
    };
    if ok {
        return Ok((a, b));
    }
    if kind == ChannelKind::Edge && k % 3 == 0 {
        return Err(GadgetError::EmbeddingInvalid(format!(
            "edge channel on horizontal edge {a:?}-{b:?}"
        )));
    }
    Ok((b, a))
}

fn placed_points(kind: ChannelKind, from: Node, to: Node) -> Vec<Point> {
    let probe = ChannelPlacement {
        kind,
        from,
        to,
        vertices: Vec::new(),
    };
    let (k, mirrored) = probe.transform().expect("oriented");
    let c = centre(from);
    kind.lattice()
        .into_iter()
        .map(|p| {
            let mut p = if mirrored { mirror(p) } else { p };
            for _ in 0..k {
                p = rot(p);
            }
            to_plane(&(&c.0 + p.0, &c.1 + p.1))
        })
        .collect()
}

fn ccw(mut ring: Vec<Point>) -> Vec<Point> {
    if signed_area2(&ring) < Rational::zero() {
        ring.reverse();
    }
    ring
}

/// Lays channels along the embedding and carves out their union.
pub fn gen_hard4h(h: &InputGraph, emb: &HexEmbedding) -> Result<Hard4hInstance, GadgetError> {
    if !h.is_connected() {
        return Err(GadgetError::InvalidInput("graph must be connected".into()));
    }
    validate_embedding(h, emb)?;
    let mut specs = Vec::new();
    for tree in &emb.trees {
        for &(a, b) in tree {
            specs.push((ChannelKind::Vertex, orient(ChannelKind::Vertex, a, b)?));
        }
    }
    for &(_, (a, b)) in &emb.reps {
        specs.push((ChannelKind::Edge, orient(ChannelKind::Edge, a, b)?));
    }

    let mut nodes = BTreeSet::new();
    let mut rings = Vec::new();
    let mut points = Vec::new();
    for &(kind, (from, to)) in &specs {
        nodes.insert(from);
        nodes.insert(to);
        let pts = placed_points(kind, from, to);
        rings.push(ccw(kind.corridor().iter().map(|&i| pts[i].clone()).collect()));
        points.push(pts);
    }
    for &p in &nodes {
        rings.push(ccw(tips(p).iter().map(to_plane).collect()));
    }

    let (outer, holes) = boundary(&rings)?;
    let polygon = validate_polygon_with_holes(outer, holes)?;
    let index: BTreeMap<Point, usize> = polygon
        .vertices()
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let lookup = |p: &Point| {
        index
            .get(p)
            .copied()
            .ok_or_else(|| GadgetError::GenerationFailed(format!("channel vertex {p:?} is not a polygon vertex")))
    };
    let mut placements = Vec::new();
    for (&(kind, (from, to)), pts) in specs.iter().zip(&points) {
        placements.push(ChannelPlacement {
            kind,
            from,
            to,
            vertices: pts.iter().map(lookup).collect::<Result<_, _>>()?,
        });
    }
    let mut joins = BTreeMap::new();
    let mut flags = BTreeMap::new();
    for &p in &nodes {
        let t = tips(p);
        let idx = [
            lookup(&to_plane(&t[0]))?,
            lookup(&to_plane(&t[1]))?,
            lookup(&to_plane(&t[2]))?,
        ];
        joins.insert(p, idx);
        flags.insert(p, idx[0]);
    }
    Ok(Hard4hInstance {
        polygon,
        placements,
        joins,
        flags,
    })
}

/// Cancels shared edges of the pieces and chains the rest into rings.
///
/// Returns the counter-clockwise outer ring and the clockwise holes, each
/// starting at its smallest point.
fn boundary(rings: &[Vec<Point>]) -> Result<(Vec<Point>, Vec<Vec<Point>>), GadgetError> {
    let mut edges: BTreeSet<(Point, Point)> = BTreeSet::new();
    for ring in rings {
        for i in 0..ring.len() {
            let a = ring[i].clone();
            let b = ring[(i + 1) % ring.len()].clone();
            if !edges.remove(&(b.clone(), a.clone())) {
                edges.insert((a, b));
            }
        }
    }
    let mut next: BTreeMap<Point, Point> = BTreeMap::new();
    for (a, b) in edges {
        if next.insert(a.clone(), b).is_some() {
            return Err(GadgetError::GenerationFailed(format!("corridors pinch at {a:?}")));
        }
    }
    let mut seen = BTreeSet::new();
    let mut outer = Vec::new();
    let mut holes = Vec::new();
    for start in next.keys() {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start.clone();
        while seen.insert(x.clone()) {
            cycle.push(x.clone());
            x = next[&x].clone();
        }
        if signed_area2(&cycle) > Rational::zero() {
            outer.push(cycle);
        } else {
            holes.push(cycle);
        }
    }
    if outer.len() != 1 {
        return Err(GadgetError::GenerationFailed(format!(
            "{} outer boundaries",
            outer.len()
        )));
    }
    Ok((outer.pop().unwrap(), holes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hard4hFailure {
    /// A channel is laid in a frame it may not use.
    Frame { placement: usize },
    /// The sightlines inside a placed channel differ from the standalone channel.
    Channel {
        placement: usize,
        a: &'static str,
        b: &'static str,
        expected: bool,
    },
    /// A sightline joins two vertices that share no channel.
    Stray { a: usize, b: usize },
    /// A join is not a triangle of mutually visible vertices.
    Join { node: Node },
    /// The flag is not the join vertex of middle height.
    Flag { node: Node },
}

impl Hard4hFailure {
    pub fn clause(&self) -> &'static str {
        match self {
            Hard4hFailure::Frame { .. } => "frame",
            Hard4hFailure::Channel { .. } => "channel",
            Hard4hFailure::Stray { .. } => "stray",
            Hard4hFailure::Join { .. } => "join",
            Hard4hFailure::Flag { .. } => "flag",
        }
    }
}

impl fmt::Display for Hard4hFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hard4hFailure::Frame { placement } => {
                write!(f, "clause frame: channel {placement} is rotated or mirrored illegally")
            }
            Hard4hFailure::Channel {
                placement,
                a,
                b,
                expected,
            } => {
                let verb = if *expected { "should see" } else { "should not see" };
                write!(f, "clause channel: channel {placement}: {a} {verb} {b}")
            }
            Hard4hFailure::Stray { a, b } => {
                write!(f, "clause stray: vertices {a} and {b} see each other across channels")
            }
            Hard4hFailure::Join { node } => write!(f, "clause join: join at {node:?} is not a triangle"),
            Hard4hFailure::Flag { node } => write!(f, "clause flag: flag at {node:?} is not the middle vertex"),
        }
    }
}

pub fn verify_hard4h(inst: &Hard4hInstance) -> Vec<Hard4hFailure> {
    verify_hard4h_with(inst, Exec::default())
}

/// Replays the channel sightline claims on the assembled polygon.
pub fn verify_hard4h_with(inst: &Hard4hInstance, exec: Exec) -> Vec<Hard4hFailure> {
    let g = visibility_graph_with_holes_with(&inst.polygon, exec);
    let n = g.n();
    let mut fails = Vec::new();
    let mut shared = VisGraph::new(n);
    for (pi, pl) in inst.placements.iter().enumerate() {
        if pl.transform().is_none() {
            fails.push(Hard4hFailure::Frame { placement: pi });
        }
        let model = pl.kind.graph();
        let names = pl.kind.names();
        if pl.vertices.len() != names.len() || pl.vertices.iter().any(|&v| v >= n) {
            fails.push(Hard4hFailure::Frame { placement: pi });
            continue;
        }
        for a in 0..names.len() {
            for b in a + 1..names.len() {
                let (u, v) = (pl.vertices[a], pl.vertices[b]);
                shared.add_edge(u, v);
                let expected = model.has_edge(a, b);
                if g.has_edge(u, v) != expected {
                    fails.push(Hard4hFailure::Channel {
                        placement: pi,
                        a: names[a],
                        b: names[b],
                        expected,
                    });
                }
            }
        }
    }
    for (a, b) in g.edges() {
        if !shared.has_edge(a, b) {
            fails.push(Hard4hFailure::Stray { a, b });
        }
    }
    let pts = inst.polygon.vertices();
    for (&node, j) in &inst.joins {
        if j.iter().any(|&v| v >= n) {
            fails.push(Hard4hFailure::Join { node });
            continue;
        }
        if !(g.has_edge(j[0], j[1]) && g.has_edge(j[1], j[2]) && g.has_edge(j[0], j[2])) {
            fails.push(Hard4hFailure::Join { node });
        }
        let mut by_y = j.to_vec();
        by_y.sort_by(|&a, &b| pts[a].y.cmp(&pts[b].y));
        let middle = pts[by_y[1]].y != pts[by_y[0]].y && pts[by_y[1]].y != pts[by_y[2]].y;
        if inst.flags.get(&node) != Some(&by_y[1]) || !middle {
            fails.push(Hard4hFailure::Flag { node });
        }
    }
    fails
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::embed_in_hex_grid;

    fn single_vertex() -> (InputGraph, HexEmbedding) {
        let h = InputGraph::new(1, &[]).unwrap();
        let emb = HexEmbedding {
            trees: vec![vec![((1, 0), (2, 0))]],
            reps: vec![],
        };
        (h, emb)
    }

    #[test]
    fn lone_vertex_channel() {
        let (h, emb) = single_vertex();
        let inst = gen_hard4h(&h, &emb).unwrap();
        assert!(inst.polygon.holes().is_empty());
        assert_eq!(inst.polygon.vertex_count(), 7);
        assert!(verify_hard4h(&inst).is_empty());
    }

    #[test]
    fn every_direction_matches_the_model() {
        for (a, b) in [((1, 0), (2, 0)), ((2, 0), (2, 1)), ((1, 0), (0, 1)), ((1, 0), (1, -1))] {
            let h = InputGraph::new(1, &[]).unwrap();
            let emb = HexEmbedding {
                trees: vec![vec![(a.min(b), a.max(b))]],
                reps: vec![],
            };
            let inst = gen_hard4h(&h, &emb).unwrap();
            assert_eq!(verify_hard4h(&inst), vec![], "{a:?}-{b:?}");
        }
    }

    #[test]
    fn single_edge_assembles() {
        let h = InputGraph::path(2);
        let inst = gen_hard4h(&h, &embed_in_hex_grid(&h).unwrap()).unwrap();
        assert_eq!(inst.placements.len(), 3);
        assert_eq!(inst.polygon.vertex_count(), 7 + 7 + 10 - 6);
        assert_eq!(verify_hard4h(&inst), vec![]);
    }

    #[test]
    fn horizontal_representative_is_rejected() {
        assert!(orient(ChannelKind::Edge, (1, 0), (2, 0)).is_err());
        assert_eq!(orient(ChannelKind::Edge, (2, 1), (2, 0)).unwrap(), ((2, 0), (2, 1)));
    }
}
