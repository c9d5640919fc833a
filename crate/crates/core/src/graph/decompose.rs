use super::{components, is_connected, VisGraph};
use crate::bits::Bits;
use crate::error::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BottleneckPair {
    pub u: usize,
    pub v: usize,
}

/// Adjacent pairs whose removal disconnects `g`, in lexicographic order.
pub fn bottleneck_pairs(g: &VisGraph) -> Result<Vec<BottleneckPair>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::GraphDisconnected);
    }
    let n = g.n();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let mut removed = Bits::new(n);
        removed.set(u);
        removed.set(v);
        if components(g, &removed).len() >= 2 {
            out.push(BottleneckPair { u, v });
        }
    }
    Ok(out)
}

/// A piece of the decomposition: an induced subgraph of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    /// Original vertex of each piece vertex, ascending.
    pub vertices: Vec<usize>,
    pub graph: VisGraph,
}

impl Piece {
    pub fn local(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Tree edge between two pieces that share the copy of `pairs[pair]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PieceLink {
    pub a: usize,
    pub b: usize,
    pub pair: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub pieces: Vec<Piece>,
    pub pairs: Vec<BottleneckPair>,
    /// For each pair, every piece holding both of its vertices.
    pub pair_links: Vec<Vec<usize>>,
    /// The piece tree; `pieces.len() - 1` links.
    pub links: Vec<PieceLink>,
}

impl Decomposition {
    /// Union of all pieces mapped back to original vertex numbers.
    pub fn merged(&self) -> VisGraph {
        let mut g = VisGraph::new(self.n);
        for piece in &self.pieces {
            for (a, b) in piece.graph.edges() {
                let (u, v) = (piece.vertices[a], piece.vertices[b]);
                if piece.graph.is_boundary(a, b) {
                    g.add_boundary_edge(u, v);
                } else {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// True when the links connect all pieces without a cycle.
    pub fn is_tree(&self) -> bool {
        let m = self.pieces.len();
        if self.links.len() + 1 != m {
            return false;
        }
        let mut root: Vec<usize> = (0..m).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for l in &self.links {
            let (ra, rb) = (find(&mut root, l.a), find(&mut root, l.b));
            if ra == rb {
                return false;
            }
            root[ra] = rb;
        }
        true
    }
}

/// Splits `g` into pieces along its bottleneck pairs.
///
/// Pairs are found once on the whole graph. Each piece that still holds both
/// vertices of a pair and is separated by it is cut into one part per
/// component, every part keeping its own copy of the pair. Splitting one pair
/// at a time keeps pieces whose vertices all belong to pairs, and never
/// attaches a pair to a side it does not bound.
pub fn decompose(g: &VisGraph) -> Result<Decomposition, GraphError> {
    let pairs = bottleneck_pairs(g)?;
    let mut parts: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    let mut links: Vec<PieceLink> = Vec::new();
    for (p, pair) in pairs.iter().enumerate() {
        let count = parts.len();
        for idx in 0..count {
            let verts = &parts[idx];
            let (Ok(lx), Ok(ly)) = (verts.binary_search(&pair.u), verts.binary_search(&pair.v)) else {
                continue;
            };
            let sub = g.induced(verts);
            let mut removed = Bits::new(verts.len());
            removed.set(lx);
            removed.set(ly);
            let comps = components(&sub, &removed);
            if comps.len() < 2 {
                continue;
            }
            let split: Vec<Vec<usize>> = comps
                .iter()
                .map(|c| {
                    let mut s: Vec<usize> = c.iter().map(|&k| verts[k]).collect();
                    s.push(pair.u);
                    s.push(pair.v);
                    s.sort_unstable();
                    s
                })
                .collect();
            let mut ids = vec![idx];
            for s in &split[1..] {
                ids.push(parts.len());
                parts.push(s.clone());
            }
            parts[idx] = split[0].clone();
            for l in links.iter_mut().filter(|l| l.a == idx || l.b == idx) {
                let q = pairs[l.pair];
                let home = split
                    .iter()
                    .position(|s| s.binary_search(&q.u).is_ok() && s.binary_search(&q.v).is_ok())
                    .expect("a linked pair stays inside one part");
                if l.a == idx {
                    l.a = ids[home];
                }
                if l.b == idx {
                    l.b = ids[home];
                }
            }
            for &id in &ids[1..] {
                links.push(PieceLink {
                    a: ids[0],
                    b: id,
                    pair: p,
                });
            }
        }
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by(|&a, &b| parts[a].cmp(&parts[b]));
    let mut rank = vec![0; parts.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let pieces: Vec<Piece> = order
        .iter()
        .map(|&i| Piece {
            vertices: parts[i].clone(),
            graph: g.induced(&parts[i]),
        })
        .collect();
    for l in links.iter_mut() {
        l.a = rank[l.a];
        l.b = rank[l.b];
    }
    let pair_links = pairs
        .iter()
        .map(|q| {
            pieces
                .iter()
                .enumerate()
                .filter(|(_, pc)| pc.local(q.u).is_some() && pc.local(q.v).is_some())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(Decomposition {
        n: g.n(),
        pieces,
        pairs,
        pair_links,
        links,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, figure1};

    /// Triangles (0,1,2) and (0,1,3) glued along 0-1.
    fn bow_tie() -> VisGraph {
        VisGraph::from_edges(4, &[(0, 1)], &[(1, 2), (2, 0), (0, 3), (3, 1)])
    }

    #[test]
    fn pairs() {
        assert!(bottleneck_pairs(&complete(4)).unwrap().is_empty());
        assert_eq!(
            bottleneck_pairs(&bow_tie()).unwrap(),
            vec![BottleneckPair { u: 0, v: 1 }]
        );
        assert!(bottleneck_pairs(&figure1()).unwrap().is_empty());
        let mut two = VisGraph::new(4);
        two.add_edge(0, 1);
        two.add_edge(2, 3);
        assert_eq!(bottleneck_pairs(&two), Err(GraphError::GraphDisconnected));
    }

    #[test]
    fn single_piece() {
        let d = decompose(&figure1()).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].graph, figure1());
        assert!(d.is_tree());
    }

    #[test]
    fn bow_tie_pieces() {
        let g = bow_tie();
        let d = decompose(&g).unwrap();
        let verts: Vec<Vec<usize>> = d.pieces.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(verts, vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert_eq!(d.pair_links, vec![vec![0, 1]]);
        assert!(d.is_tree());
        assert_eq!(d.merged(), g);
    }

    #[test]
    fn piece_of_pair_vertices_only() {
        // three quads in a row: 0 1 6 7 | 1 2 5 6 | 2 3 4 5, with 1-6 and 2-5 uncrossed
        let ring: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        let chords = [(0, 6), (1, 7), (1, 6), (1, 5), (2, 6), (2, 5), (2, 4), (3, 5)];
        let g = VisGraph::from_edges(8, &chords, &ring);
        let d = decompose(&g).unwrap();
        let verts: Vec<Vec<usize>> = d.pieces.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(verts, vec![vec![0, 1, 6, 7], vec![1, 2, 5, 6], vec![2, 3, 4, 5]]);
        assert!(d.is_tree());
        assert_eq!(d.merged(), g);
    }

    #[test]
    fn fan_around_shared_vertex() {
        // triangles 0-1-2, 0-2-3, 0-3-4 of a fan: pairs 0-2 and 0-3 share vertex 0
        let g = VisGraph::from_edges(5, &[(0, 2), (0, 3)], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let d = decompose(&g).unwrap();
        let verts: Vec<Vec<usize>> = d.pieces.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(verts, vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4]]);
        assert!(d.is_tree());
        assert_eq!(d.merged(), g);
    }

    #[test]
    fn cycle_has_no_pairs_to_split() {
        // in a 5-cycle every edge removal leaves a path, so nothing splits
        let d = decompose(&cycle(5)).unwrap();
        assert_eq!(d.pieces.len(), 1);
    }
}
