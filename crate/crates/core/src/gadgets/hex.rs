//! Minor models of a graph in the honeycomb grid.
//!
//! Grid nodes are the axial points `(q, r)` with `q - r` not divisible by 3.
//! Nodes with `q - r = 1 (mod 3)` use directions 0, 2, 4 of [`DIRS`], the
//! others directions 1, 3, 5, so every node has degree 3.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::InputGraph;
use crate::error::GadgetError;

pub type Node = (i64, i64);

/// A grid edge with its endpoints in ascending order.
pub type GridEdge = (Node, Node);

pub(crate) const DIRS: [Node; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

pub(crate) fn is_node(p: Node) -> bool {
    (p.0 - p.1).rem_euclid(3) != 0
}

/// Whether `p` is of the first node class, with directions 0, 2, 4.
pub(crate) fn is_even_class(p: Node) -> bool {
    (p.0 - p.1).rem_euclid(3) == 1
}

pub(crate) fn neighbors(p: Node) -> impl Iterator<Item = (usize, Node)> {
    let start = if is_even_class(p) { 0 } else { 1 };
    (start..6)
        .step_by(2)
        .map(move |k| (k, (p.0 + DIRS[k].0, p.1 + DIRS[k].1)))
}

/// Direction index of the step from `a` to `b`, if they are grid neighbours.
pub(crate) fn direction(a: Node, b: Node) -> Option<usize> {
    if !is_node(a) || !is_node(b) {
        return None;
    }
    let d = (b.0 - a.0, b.1 - a.1);
    DIRS.iter().position(|&x| x == d)
}

pub(crate) fn edge(a: Node, b: Node) -> GridEdge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn is_horizontal(e: GridEdge) -> bool {
    e.0 .1 == e.1 .1
}

/// Vertex trees and representative edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HexEmbedding {
    /// Grid edges of `T_v` for every vertex `v`, sorted.
    pub trees: Vec<Vec<GridEdge>>,
    /// Representative grid edge of every edge `(u, v)` of the graph.
    pub reps: Vec<((usize, usize), GridEdge)>,
}

impl HexEmbedding {
    /// Smallest and largest node coordinates in use.
    pub fn extent(&self) -> Option<(Node, Node)> {
        let nodes: Vec<Node> = self
            .trees
            .iter()
            .flatten()
            .chain(self.reps.iter().map(|r| &r.1))
            .flat_map(|e| [e.0, e.1])
            .collect();
        let lo = (nodes.iter().map(|p| p.0).min()?, nodes.iter().map(|p| p.1).min()?);
        let hi = (nodes.iter().map(|p| p.0).max()?, nodes.iter().map(|p| p.1).max()?);
        Some((lo, hi))
    }

    pub fn tree_nodes(&self, v: usize) -> BTreeSet<Node> {
        self.trees[v].iter().flat_map(|e| [e.0, e.1]).collect()
    }
}

/// Checks that `emb` is a valid model of `h` with non-horizontal representatives.
pub fn validate_embedding(h: &InputGraph, emb: &HexEmbedding) -> Result<(), GadgetError> {
    let bad = |m: String| Err(GadgetError::EmbeddingInvalid(m));
    if emb.trees.len() != h.n() {
        return bad(format!("{} trees for {} vertices", emb.trees.len(), h.n()));
    }
    let mut owner: BTreeMap<Node, usize> = BTreeMap::new();
    let mut used: BTreeSet<GridEdge> = BTreeSet::new();
    for (v, tree) in emb.trees.iter().enumerate() {
        if tree.is_empty() {
            return bad(format!("tree of {v} has no edge"));
        }
        for &(a, b) in tree {
            if direction(a, b).is_none() {
                return bad(format!("tree of {v}: {a:?}-{b:?} is not a grid edge"));
            }
            if !used.insert(edge(a, b)) {
                return bad(format!("grid edge {a:?}-{b:?} used twice"));
            }
        }
        let nodes = emb.tree_nodes(v);
        for &p in &nodes {
            if let Some(u) = owner.insert(p, v) {
                return bad(format!("trees of {u} and {v} share node {p:?}"));
            }
        }
        if nodes.len() != tree.len() + 1 || !connected(&nodes, tree) {
            return bad(format!("tree of {v} is not a tree"));
        }
    }
    if emb.reps.len() != h.edges().len() {
        return bad(format!(
            "{} representative edges for {} edges",
            emb.reps.len(),
            h.edges().len()
        ));
    }
    for (&(u, v), &((x, y), (a, b))) in h.edges().iter().zip(&emb.reps) {
        if (x.min(y), x.max(y)) != (u, v) {
            return bad(format!("representative for ({u}, {v}) listed as ({x}, {y})"));
        }
        if direction(a, b).is_none() {
            return bad(format!("representative of ({u}, {v}) is not a grid edge"));
        }
        if is_horizontal((a, b)) {
            return bad(format!("representative of ({u}, {v}) is horizontal"));
        }
        let ends = (owner.get(&a).copied(), owner.get(&b).copied());
        if ends != (Some(u), Some(v)) && ends != (Some(v), Some(u)) {
            return bad(format!("representative of ({u}, {v}) does not join their trees"));
        }
        if !used.insert(edge(a, b)) {
            return bad(format!("grid edge {a:?}-{b:?} used twice"));
        }
    }
    Ok(())
}

fn connected(nodes: &BTreeSet<Node>, tree: &[GridEdge]) -> bool {
    let mut adj: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
    for &(a, b) in tree {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = match nodes.iter().next() {
        Some(&p) => p,
        None => return true,
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for &q in adj.get(&p).into_iter().flatten() {
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen.len() == nodes.len()
}

/// Searches for an embedding of a small connected graph.
///
/// Vertices are placed in breadth-first order. Each new tree starts next to
/// its first placed neighbour and grows along shortest free paths until it
/// touches every other placed neighbour through a non-horizontal grid edge.
/// Every root is tried in turn; the first valid result is returned.
pub fn embed_in_hex_grid(h: &InputGraph) -> Result<HexEmbedding, GadgetError> {
    if !h.is_connected() {
        return Err(GadgetError::InvalidInput("graph must be connected".into()));
    }
    let radius = 6 + 3 * h.n() as i64;
    for root in 0..h.n() {
        if let Some(emb) = Builder::new(h, radius).run(root) {
            if validate_embedding(h, &emb).is_ok() {
                return Ok(emb);
            }
        }
    }
    Err(GadgetError::EmbeddingNotFound)
}

struct Builder<'a> {
    h: &'a InputGraph,
    radius: i64,
    owner: BTreeMap<Node, usize>,
    trees: Vec<Vec<GridEdge>>,
    reps: BTreeMap<(usize, usize), GridEdge>,
}

impl<'a> Builder<'a> {
    fn new(h: &'a InputGraph, radius: i64) -> Self {
        Builder {
            h,
            radius,
            owner: BTreeMap::new(),
            trees: vec![Vec::new(); h.n()],
            reps: BTreeMap::new(),
        }
    }

    fn in_range(&self, p: Node) -> bool {
        p.0.abs() <= self.radius && p.1.abs() <= self.radius
    }

    fn free(&self, p: Node) -> bool {
        self.in_range(p) && !self.owner.contains_key(&p)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.h.n()];
        for &(a, b) in self.h.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn run(mut self, root: usize) -> Option<HexEmbedding> {
        let adj = self.adjacency();
        let mut order = vec![root];
        let mut placed = vec![false; self.h.n()];
        placed[root] = true;
        let mut i = 0;
        while i < order.len() {
            for &w in &adj[order[i]] {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut done = vec![false; self.h.n()];
        self.claim(root, (1, 0));
        self.claim(root, (2, 0));
        self.trees[root].push(((1, 0), (2, 0)));
        done[root] = true;
        for &v in &order[1..] {
            let mut nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| done[u]).collect();
            nbrs.sort_by_key(|u| order.iter().position(|x| x == u));
            self.grow(v, &nbrs)?;
            done[v] = true;
        }
        let reps = self
            .h
            .edges()
            .iter()
            .map(|&e| Some((e, *self.reps.get(&e)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(HexEmbedding {
            trees: self
                .trees
                .into_iter()
                .map(|mut t| {
                    t.sort();
                    t
                })
                .collect(),
            reps,
        })
    }

    fn claim(&mut self, v: usize, p: Node) {
        self.owner.insert(p, v);
    }

    /// Free node `x` with a non-horizontal edge to a node `y` of `T_u`.
    fn contacts(&self, u: usize, x: Node) -> Option<Node> {
        neighbors(x)
            .filter(|&(k, _)| k % 3 != 0)
            .map(|(_, y)| y)
            .find(|y| self.owner.get(y) == Some(&u))
    }

    fn grow(&mut self, v: usize, nbrs: &[usize]) -> Option<()> {
        let first = nbrs[0];
        // the first node of T_v touches the first placed neighbour
        let mut start = None;
        for &y in self.owner.iter().filter(|(_, &o)| o == first).map(|(p, _)| p) {
            if let Some((_, x)) = neighbors(y).find(|&(k, x)| k % 3 != 0 && self.free(x)) {
                start = Some((x, y));
                break;
            }
        }
        let (x, y) = start?;
        self.claim(v, x);
        self.reps.insert(key(first, v), edge(x, y));
        for &u in &nbrs[1..] {
            let path = self.path_to(v, u)?;
            let end = *path.last().unwrap();
            for w in path.windows(2) {
                self.claim(v, w[1]);
                self.trees[v].push(edge(w[0], w[1]));
            }
            let y = self.contacts(u, end)?;
            self.reps.insert(key(u, v), edge(end, y));
        }
        if self.trees[v].is_empty() {
            let (_, b) = neighbors(x)
                .filter(|&(_, b)| self.free(b))
                .min_by_key(|&(k, _)| (k % 3 != 0, k))?;
            self.claim(v, b);
            self.trees[v].push(edge(x, b));
        }
        Some(())
    }

    /// Shortest path from `T_v` through free nodes to a node touching `T_u`.
    fn path_to(&self, v: usize, u: usize) -> Option<Vec<Node>> {
        let mut prev: BTreeMap<Node, Option<Node>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for (&p, &o) in &self.owner {
            if o == v {
                prev.insert(p, None);
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            if self.contacts(u, p).is_some() && !self.rep_uses(p, u) {
                let mut path = vec![p];
                let mut cur = p;
                while let Some(Some(q)) = prev.get(&cur) {
                    path.push(*q);
                    cur = *q;
                }
                path.reverse();
                return Some(path);
            }
            for (_, q) in neighbors(p) {
                if self.free(q) && !prev.contains_key(&q) {
                    prev.insert(q, Some(p));
                    queue.push_back(q);
                }
            }
        }
        None
    }

    /// Whether every contact edge from `p` into `T_u` is already a representative.
    fn rep_uses(&self, p: Node, u: usize) -> bool {
        let y = match self.contacts(u, p) {
            Some(y) => y,
            None => return true,
        };
        self.reps.values().any(|&e| e == edge(p, y))
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_classes() {
        assert!(is_node((1, 0)) && is_node((2, 0)) && !is_node((0, 0)));
        for p in [(1, 0), (2, 0), (4, -1), (-2, 3)] {
            for (_, q) in neighbors(p) {
                assert!(is_node(q), "{p:?} -> {q:?}");
                assert!(neighbors(q).any(|(_, b)| b == p));
            }
        }
        assert_eq!(direction((1, 0), (2, 0)), Some(0));
        assert_eq!(direction((2, 0), (2, 1)), Some(1));
        assert_eq!(direction((1, 0), (1, 1)), None);
    }

    #[test]
    fn validator_rejects() {
        let h = InputGraph::path(2);
        let good = HexEmbedding {
            trees: vec![vec![((1, 0), (2, 0))], vec![((2, 1), (3, 1))]],
            reps: vec![((0, 1), ((2, 0), (2, 1)))],
        };
        assert!(validate_embedding(&h, &good).is_ok());
        let mut horiz = good.clone();
        horiz.trees[1] = vec![((3, 0), (4, -1))];
        horiz.reps[0].1 = ((2, 0), (3, 0));
        assert!(validate_embedding(&h, &horiz).is_err());
        let mut overlap = good.clone();
        overlap.trees[1] = vec![((2, 0), (2, 1))];
        overlap.reps[0].1 = ((2, 1), (3, 1));
        assert!(validate_embedding(&h, &overlap).is_err());
        let mut split = good.clone();
        split.trees[1] = vec![((2, 1), (3, 1)), ((4, 0), (5, 0))];
        assert!(validate_embedding(&h, &split).is_err());
        let mut empty = good;
        empty.trees[1].clear();
        assert!(validate_embedding(&h, &empty).is_err());
    }

    #[test]
    fn small_graphs_embed() {
        for h in [
            InputGraph::path(2),
            InputGraph::path(3),
            InputGraph::complete(3),
            InputGraph::complete(4),
            InputGraph::cycle(5),
            InputGraph::new(1, &[]).unwrap(),
        ] {
            let emb = embed_in_hex_grid(&h).unwrap();
            validate_embedding(&h, &emb).unwrap();
        }
        assert!(embed_in_hex_grid(&InputGraph::new(3, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn single_edge_uses_three_grid_edges() {
        let emb = embed_in_hex_grid(&InputGraph::path(2)).unwrap();
        let count: usize = emb.trees.iter().map(Vec::len).sum::<usize>() + emb.reps.len();
        assert_eq!(count, 3);
    }
}
