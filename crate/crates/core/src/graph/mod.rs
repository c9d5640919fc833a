//! Connectivity, cliques, bottleneck pairs, decomposition and the colouring oracle.

mod decompose;
mod oracle;

pub use decompose::{bottleneck_pairs, decompose, BottleneckPair, Decomposition, Piece, PieceLink};
pub use oracle::{brute_force_coloring, brute_force_coloring_budgeted, enumerate_colorings, DEFAULT_CAP};

use crate::bits::Bits;
pub use crate::visibility::VisGraph;

/// Per-vertex colour assignment with a colour budget `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    k: usize,
}

impl Coloring {
    pub fn empty(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![None; n],
            k,
        }
    }

    /// Panics if any colour is `>= k`.
    pub fn total(colors: Vec<usize>, k: usize) -> Self {
        assert!(colors.iter().all(|&c| c < k), "colour out of range");
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
            k,
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: usize) {
        assert!(c < self.k, "colour {c} out of range");
        self.colors[v] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// The colours as a plain vector, if every vertex is coloured.
    pub fn to_vec(&self) -> Option<Vec<usize>> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colours in use.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for c in self.colors.iter().flatten() {
            seen[*c] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Colour classes as sorted vertex lists, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by: Vec<Vec<usize>> = vec![Vec::new(); self.k];
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                by[*c].push(v);
            }
        }
        let mut out: Vec<Vec<usize>> = by.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort();
        out
    }

    /// True when the two colourings differ only by renaming colours.
    pub fn is_permutation_of(&self, other: &Coloring) -> bool {
        self.n() == other.n() && self.classes() == other.classes()
    }

    /// Applies `perm[c]` to every colour.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|c| c.map(|c| perm[c])).collect(),
            k: self.k,
        }
    }
}

/// True iff `c` colours every vertex and every edge is bichromatic.
pub fn is_proper(g: &VisGraph, c: &Coloring) -> bool {
    if c.n() != g.n() || !c.is_total() {
        return false;
    }
    g.edges().iter().all(|&(u, v)| c.get(u) != c.get(v))
}

/// Connected components of `g` after deleting `removed`, each sorted, in
/// order of smallest vertex.
pub fn components(g: &VisGraph, removed: &Bits) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for s in 0..n {
        if seen.get(s) {
            continue;
        }
        seen.set(s);
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            k += 1;
            for w in g.neighbors(u) {
                if !seen.get(w) {
                    seen.set(w);
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &VisGraph) -> bool {
    components(g, &Bits::new(g.n())).len() <= 1
}

/// Lexicographically smallest triangle.
pub fn find_triangle(g: &VisGraph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for b in g.neighbors(a).filter(|&b| b > a) {
            if let Some(c) = g.row(a).and(g.row(b)).iter().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Lexicographically smallest 5-clique.
pub fn contains_k5(g: &VisGraph) -> Option<[usize; 5]> {
    find_clique(g, 5).map(|c| [c[0], c[1], c[2], c[3], c[4]])
}

/// Lexicographically smallest clique of size `size`.
pub fn find_clique(g: &VisGraph, size: usize) -> Option<Vec<usize>> {
    fn extend(g: &VisGraph, size: usize, cur: &mut Vec<usize>, cand: &Bits) -> bool {
        if cur.len() == size {
            return true;
        }
        let last = *cur.last().unwrap();
        for v in cand.iter().filter(|&v| v > last) {
            cur.push(v);
            if extend(g, size, cur, &cand.and(g.row(v))) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if size == 0 {
        return Some(Vec::new());
    }
    for a in 0..g.n() {
        let mut cur = vec![a];
        if extend(g, size, &mut cur, g.row(a)) {
            return Some(cur);
        }
    }
    None
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn complete(n: usize) -> VisGraph {
        let mut g = VisGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> VisGraph {
        let mut g = VisGraph::new(n);
        for u in 0..n {
            g.add_boundary_edge(u, (u + 1) % n);
        }
        g
    }

    /// Figure-1 graph with A..F numbered 0..5.
    pub fn figure1() -> VisGraph {
        let ring: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let chords = [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)];
        VisGraph::from_edges(6, &chords, &ring)
    }

    #[test]
    fn proper() {
        let k3 = complete(3);
        assert!(is_proper(&k3, &Coloring::total(vec![0, 1, 2], 3)));
        assert!(!is_proper(&k3, &Coloring::total(vec![0, 1, 1], 3)));
        let mut partial = Coloring::empty(3, 3);
        partial.set(0, 0);
        assert!(!is_proper(&k3, &partial));
        // {A,E} {B,D} {C} {F}
        let c = Coloring::total(vec![0, 1, 2, 1, 0, 3], 4);
        assert!(is_proper(&figure1(), &c));
    }

    #[test]
    fn triangles() {
        assert_eq!(find_triangle(&complete(3)), Some([0, 1, 2]));
        assert_eq!(find_triangle(&complete(2)), None);
        assert_eq!(find_triangle(&figure1()), Some([0, 1, 2]));
        assert_eq!(find_triangle(&cycle(5)), None);
    }

    #[test]
    fn k5() {
        assert_eq!(contains_k5(&complete(5)), Some([0, 1, 2, 3, 4]));
        assert_eq!(contains_k5(&figure1()), None);
        assert_eq!(contains_k5(&complete(4)), None);
    }

    #[test]
    fn classes_and_permutations() {
        let c = Coloring::total(vec![0, 1, 2, 1, 0, 3], 4);
        assert_eq!(c.classes(), vec![vec![0, 4], vec![1, 3], vec![2], vec![5]]);
        let d = c.permuted(&[3, 2, 1, 0]);
        assert!(c.is_permutation_of(&d));
        assert_eq!(d.used(), 4);
        let e = Coloring::total(vec![0, 1, 2, 1, 3, 0], 4);
        assert!(!c.is_permutation_of(&e));
    }

    #[test]
    fn components_after_removal() {
        let g = cycle(6);
        let mut r = Bits::new(6);
        r.set(0);
        r.set(3);
        assert_eq!(components(&g, &r), vec![vec![1, 2], vec![4, 5]]);
        assert!(is_connected(&g));
    }
}
