use super::{Hard4hInstance, Hard5Instance, InputGraph};
use crate::error::GadgetError;
use crate::graph::brute_force_coloring_budgeted;
use crate::visibility::{visibility_graph, visibility_graph_with_holes};

#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    Hard5(&'a Hard5Instance),
    Hard4h(&'a Hard4hInstance),
}

impl Instance<'_> {
    /// Colour count the reduction targets.
    pub fn k(&self) -> usize {
        match self {
            Instance::Hard5(_) => 5,
            Instance::Hard4h(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub k: usize,
    pub graph_three_colourable: bool,
    pub instance_colourable: bool,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.graph_three_colourable == self.instance_colourable
    }
}

/// Decides both sides of the reduction with the exact oracle.
///
/// `budget` bounds the search nodes of each of the two oracle calls.
pub fn verify_reduction(inst: Instance<'_>, h: &InputGraph, budget: u64) -> Result<ReductionReport, GadgetError> {
    let g = match inst {
        Instance::Hard5(i) => visibility_graph(&i.polygon),
        Instance::Hard4h(i) => visibility_graph_with_holes(&i.polygon),
    };
    let k = inst.k();
    let graph_three_colourable = brute_force_coloring_budgeted(&h.to_graph(), 3, budget)?.is_some();
    let instance_colourable = brute_force_coloring_budgeted(&g, k, budget)?.is_some();
    Ok(ReductionReport {
        k,
        graph_three_colourable,
        instance_colourable,
    })
}
