use super::{find_clique, Coloring, VisGraph};
use crate::error::GraphError;

/// Default cap on the number of colourings `enumerate_colorings` may return.
pub const DEFAULT_CAP: usize = 100_000;

/// A proper `k`-colouring if one exists.
pub fn brute_force_coloring(g: &VisGraph, k: usize) -> Option<Coloring> {
    brute_force_coloring_budgeted(g, k, u64::MAX).expect("unbounded search")
}

/// Exact search for a proper `k`-colouring, counting assignments against `budget`.
///
/// The next vertex is the one with the fewest colours left, then the highest
/// degree, then the lowest index. Colours are tried in ascending order and a
/// fresh colour is only ever the smallest unused one. Assigning a colour
/// removes it from the neighbours' domains; an empty domain backtracks, and a
/// single remaining colour is taken next.
pub fn brute_force_coloring_budgeted(g: &VisGraph, k: usize, budget: u64) -> Result<Option<Coloring>, GraphError> {
    assert!((1..=64).contains(&k), "colour budget must be in 1..=64");
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::empty(0, k)));
    }
    if find_clique(g, k + 1).is_some() {
        return Ok(None);
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut s = Search {
        g,
        k,
        domain: vec![full; n],
        color: vec![None; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget,
    };
    if s.run(0)? {
        let colors = s.color.iter().map(|c| c.unwrap()).collect();
        Ok(Some(Coloring::total(colors, k)))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    g: &'a VisGraph,
    k: usize,
    domain: Vec<u64>,
    color: Vec<Option<usize>>,
    degree: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, std::cmp::Reverse<usize>, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v].is_some() {
                continue;
            }
            let key = (self.domain[v].count_ones(), std::cmp::Reverse(self.degree[v]), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn run(&mut self, used: usize) -> Result<bool, GraphError> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.domain[v] >> c & 1 == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(GraphError::BudgetExceeded(self.budget));
            }
            let bit = 1u64 << c;
            let mut touched = Vec::new();
            let mut dead = false;
            for w in self.g.neighbors(v) {
                if self.color[w].is_none() && self.domain[w] & bit != 0 {
                    self.domain[w] &= !bit;
                    touched.push(w);
                    if self.domain[w] == 0 {
                        dead = true;
                    }
                }
            }
            if !dead {
                self.color[v] = Some(c);
                if self.run(used.max(c + 1))? {
                    return Ok(true);
                }
                self.color[v] = None;
            }
            for w in touched {
                self.domain[w] |= bit;
            }
        }
        Ok(false)
    }
}

/// Every proper `k`-colouring in lexicographic order of the colour vector.
pub fn enumerate_colorings(g: &VisGraph, k: usize, cap: usize) -> Result<Vec<Coloring>, GraphError> {
    fn go(
        g: &VisGraph,
        k: usize,
        cap: usize,
        v: usize,
        colors: &mut Vec<usize>,
        out: &mut Vec<Coloring>,
    ) -> Result<(), GraphError> {
        if v == g.n() {
            if out.len() == cap {
                return Err(GraphError::CapExceeded(cap));
            }
            out.push(Coloring::total(colors.clone(), k));
            return Ok(());
        }
        for c in 0..k {
            if g.neighbors(v).take_while(|&w| w < v).all(|w| colors[w] != c) {
                colors.push(c);
                go(g, k, cap, v + 1, colors, out)?;
                colors.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(g, k, cap, 0, &mut Vec::with_capacity(g.n()), &mut out)?;
    Ok(out)
}
