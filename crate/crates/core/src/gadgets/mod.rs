//! Hardness gadgets: the sawtooth polygon for 5-colouring and the corridor
//! polygon with holes for 4-colouring, with verifiers for both.

mod channel;
mod hard4h;
mod hard5;
mod hex;
mod reduction;

pub use channel::{
    edge_channel, edge_channel_graph, vertex_channel, vertex_channel_graph, ChannelKind, EdgeChannel, VertexChannel,
};
pub use hard4h::{gen_hard4h, verify_hard4h, verify_hard4h_with, ChannelPlacement, Hard4hFailure, Hard4hInstance};
pub use hard5::{gen_hard5, verify_hard5, verify_hard5_with, Hard5Failure, Hard5Instance, GRID_CONSTANT, PINHOLE};
pub use hex::{embed_in_hex_grid, validate_embedding, GridEdge, HexEmbedding, Node};
pub use reduction::{verify_reduction, Instance, ReductionReport};

use crate::error::GadgetError;
use crate::graph::{is_connected, VisGraph};

/// Simple undirected graph handed to the reductions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InputGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl InputGraph {
    /// Edges are stored as given, each normalised to `(min, max)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GadgetError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GadgetError::InvalidInput(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(GadgetError::InvalidInput(format!("loop at {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GadgetError::InvalidInput(format!("repeated edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(InputGraph { n, edges: out })
    }

    pub fn from_graph(g: &VisGraph) -> Self {
        InputGraph {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> VisGraph {
        VisGraph::from_edges(self.n, &self.edges, &[])
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && is_connected(&self.to_graph())
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        InputGraph { n, edges: e }
    }

    pub fn path(n: usize) -> Self {
        InputGraph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = InputGraph::path(n);
        g.edges.push((0, n - 1));
        g
    }
}
