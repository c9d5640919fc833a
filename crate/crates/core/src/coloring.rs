//! Triangulation-driven 3-colouring and decomposition-driven 4-colouring.

use crate::bits::Bits;
use crate::error::{ColoringError, GraphError};
use crate::exec::Exec;
use crate::geom::{triangulate, SimplePolygon};
use crate::graph::{contains_k5, decompose, find_triangle, is_connected, is_proper, Coloring, Decomposition, VisGraph};
use crate::visibility::visibility_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Colourable,
    NotColourable,
    PromiseViolated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Colourable => "COLOURABLE",
            Verdict::NotColourable => "NOT_COLOURABLE",
            Verdict::PromiseViolated => "PROMISE_VIOLATED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// A clique larger than the colour budget.
    Clique(Vec<usize>),
    /// Adjacent vertices forced to the same colour.
    Conflict(usize, usize),
    /// Propagation stopped in `piece` with `colored` of its vertices coloured.
    Stall {
        piece: usize,
        colored: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourColorOutcome {
    pub verdict: Verdict,
    pub coloring: Option<Coloring>,
    pub witness: Witness,
}

impl FourColorOutcome {
    fn colourable(c: Coloring) -> Self {
        FourColorOutcome {
            verdict: Verdict::Colourable,
            coloring: Some(c),
            witness: Witness::None,
        }
    }

    fn negative(verdict: Verdict, witness: Witness) -> Self {
        FourColorOutcome {
            verdict,
            coloring: None,
            witness,
        }
    }
}

/// The 3-colouring forced by the ear-clipping triangulation, if it is proper
/// on the whole visibility graph.
pub fn three_color(poly: &SimplePolygon) -> Option<Coloring> {
    let tris = triangulate(poly);
    let n = poly.len();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seed = tris[0];
    seed.sort_unstable();
    for (c, &v) in seed.iter().enumerate() {
        color[v] = Some(c);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for t in &tris {
            let known: Vec<usize> = t.iter().filter_map(|&v| color[v]).collect();
            if known.len() != 2 {
                continue;
            }
            if known[0] == known[1] {
                return None;
            }
            let third = 3 - known[0] - known[1];
            let v = *t.iter().find(|&&v| color[v].is_none()).unwrap();
            color[v] = Some(third);
            changed = true;
        }
    }
    let colors: Vec<usize> = color.into_iter().collect::<Option<_>>()?;
    let c = Coloring::total(colors, 3);
    is_proper(&visibility_graph(poly), &c).then_some(c)
}

/// 3-colouring by forced propagation over the graph alone.
///
/// Seeds the smallest triangle, then repeatedly colours the lowest-index
/// vertex seeing both ends of a bichromatic coloured edge with the third colour.
pub fn three_color_graph(g: &VisGraph) -> Result<FourColorOutcome, GraphError> {
    if g.n() == 0 {
        return Ok(FourColorOutcome::colourable(Coloring::empty(0, 3)));
    }
    if !is_connected(g) {
        return Err(GraphError::GraphDisconnected);
    }
    if let Some(k4) = crate::graph::find_clique(g, 4) {
        return Ok(FourColorOutcome::negative(Verdict::NotColourable, Witness::Clique(k4)));
    }
    let mut st = State::new(g, 3);
    if g.n() < 3 {
        return Ok(FourColorOutcome::colourable(greedy(g, 3)));
    }
    let Some(t) = find_triangle(g) else {
        return Ok(FourColorOutcome::negative(
            Verdict::PromiseViolated,
            Witness::Stall { piece: 0, colored: 0 },
        ));
    };
    for (c, &v) in t.iter().enumerate() {
        st.assign(v, c);
    }
    while st.count < g.n() {
        let next = (0..g.n()).find_map(|v| {
            if st.color[v].is_some() {
                return None;
            }
            let near = g.row(v).and(&st.colored);
            let found = near.iter().find_map(|a| {
                let ca = st.color[a].unwrap();
                let both = near.and(g.row(a));
                let b = both.iter().find(|&b| b > a && st.color[b] != Some(ca));
                b.map(|b| (v, 3 - ca - st.color[b].unwrap()))
            });
            found
        });
        let Some((v, c)) = next else {
            return Ok(FourColorOutcome::negative(
                Verdict::PromiseViolated,
                Witness::Stall {
                    piece: 0,
                    colored: st.count,
                },
            ));
        };
        if let Some(w) = st.assign(v, c) {
            return Ok(FourColorOutcome::negative(
                Verdict::NotColourable,
                Witness::Conflict(v.min(w), v.max(w)),
            ));
        }
    }
    Ok(FourColorOutcome::colourable(st.finish()))
}

/// Propagation state for one piece.
struct State<'a> {
    g: &'a VisGraph,
    k: usize,
    color: Vec<Option<usize>>,
    colored: Bits,
    class: Vec<Bits>,
    count: usize,
}

impl<'a> State<'a> {
    fn new(g: &'a VisGraph, k: usize) -> Self {
        State {
            g,
            k,
            color: vec![None; g.n()],
            colored: Bits::new(g.n()),
            class: vec![Bits::new(g.n()); k],
            count: 0,
        }
    }

    /// Colours `v`; returns a coloured neighbour with the same colour, if any.
    fn assign(&mut self, v: usize, c: usize) -> Option<usize> {
        self.color[v] = Some(c);
        self.colored.set(v);
        self.class[c].set(v);
        self.count += 1;
        self.g.row(v).and(&self.class[c]).iter().next()
    }

    /// A coloured triangle in the neighbourhood of `v` using three distinct colours.
    fn witness(&self, v: usize) -> Option<[usize; 3]> {
        let near = self.g.row(v).and(&self.colored);
        for a in near.iter() {
            let ca = self.color[a].unwrap();
            let na = near.and(self.g.row(a));
            for b in na.iter().filter(|&b| b > a) {
                let cb = self.color[b].unwrap();
                if cb == ca {
                    continue;
                }
                let nab = na.and(self.g.row(b));
                let third = nab
                    .iter()
                    .find(|&c| c > b && self.color[c] != Some(ca) && self.color[c] != Some(cb));
                if let Some(c) = third {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    fn finish(self) -> Coloring {
        Coloring::total(self.color.into_iter().map(Option::unwrap).collect(), self.k)
    }
}

fn greedy(g: &VisGraph, k: usize) -> Coloring {
    let mut c = Coloring::empty(g.n(), k);
    for v in 0..g.n() {
        let taken: Vec<usize> = g.neighbors(v).filter_map(|w| c.get(w)).collect();
        let free = (0..k).find(|x| !taken.contains(x)).expect("piece smaller than k");
        c.set(v, free);
    }
    c
}

enum PieceResult {
    Done(Coloring),
    Conflict(usize, usize),
    Stall(usize),
}

/// Seeds the smallest triangle and forces the rest of the piece.
fn color_piece(g: &VisGraph) -> PieceResult {
    let n = g.n();
    if n < 3 {
        return PieceResult::Done(greedy(g, 4));
    }
    let Some(t) = find_triangle(g) else {
        return PieceResult::Stall(0);
    };
    let mut st = State::new(g, 4);
    for (c, &v) in t.iter().enumerate() {
        st.assign(v, c);
    }
    while st.count < n {
        let found = (0..n)
            .filter(|&v| st.color[v].is_none())
            .find_map(|v| st.witness(v).map(|w| (v, w)));
        let Some((v, tri)) = found else {
            return PieceResult::Stall(st.count);
        };
        let seen: Vec<usize> = tri.iter().map(|&x| st.color[x].unwrap()).collect();
        let fourth = (0..4).find(|c| !seen.contains(c)).unwrap();
        debug_assert_eq!(seen.iter().sum::<usize>() + fourth, 6);
        if let Some(w) = st.assign(v, fourth) {
            return PieceResult::Conflict(v, w);
        }
    }
    PieceResult::Done(st.finish())
}

/// Decides 4-colourability of a graph promised to be a polygon visibility graph.
///
/// Any clash between forced colours is reported as `NotColourable`, since
/// every step is forced once the seed triangle is fixed. A piece that stops
/// without a clash breaks the promise.
pub fn four_color(g: &VisGraph) -> Result<FourColorOutcome, GraphError> {
    four_color_with(g, Exec::default())
}

pub fn four_color_with(g: &VisGraph, exec: Exec) -> Result<FourColorOutcome, GraphError> {
    if g.n() == 0 {
        return Ok(FourColorOutcome::colourable(Coloring::empty(0, 4)));
    }
    if !is_connected(g) {
        return Err(GraphError::GraphDisconnected);
    }
    if let Some(k5) = contains_k5(g) {
        return Ok(FourColorOutcome::negative(
            Verdict::NotColourable,
            Witness::Clique(k5.to_vec()),
        ));
    }
    let d = decompose(g)?;
    let results = exec.map(&d.pieces, |p| color_piece(&p.graph));
    let mut stall = None;
    let mut piece_colorings = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            PieceResult::Conflict(a, b) => {
                let (u, v) = (d.pieces[i].vertices[a], d.pieces[i].vertices[b]);
                return Ok(FourColorOutcome::negative(
                    Verdict::NotColourable,
                    Witness::Conflict(u.min(v), u.max(v)),
                ));
            }
            PieceResult::Stall(colored) => {
                stall.get_or_insert(Witness::Stall { piece: i, colored });
            }
            PieceResult::Done(c) => piece_colorings.push(c),
        }
    }
    if let Some(w) = stall {
        return Ok(FourColorOutcome::negative(Verdict::PromiseViolated, w));
    }
    match glue_colorings(&d, &piece_colorings) {
        Ok(c) if is_proper(g, &c) => Ok(FourColorOutcome::colourable(c)),
        _ => Ok(FourColorOutcome::negative(
            Verdict::PromiseViolated,
            Witness::Stall { piece: 0, colored: 0 },
        )),
    }
}

/// Visibility graph followed by [`four_color`]; a broken promise is an internal error here.
pub fn four_color_polygon(poly: &SimplePolygon) -> Result<FourColorOutcome, ColoringError> {
    let out = four_color(&visibility_graph(poly))?;
    if out.verdict == Verdict::PromiseViolated {
        return Err(ColoringError::Internal(format!("{:?}", out.witness)));
    }
    Ok(out)
}

/// Merges per-piece colourings along the piece tree.
///
/// Piece 0 keeps its colours. Every other piece is recoloured so that its
/// copy of the linking pair matches the parent; its two other colours map to
/// the parent's two free colours in ascending order.
pub fn glue_colorings(d: &Decomposition, piece_colorings: &[Coloring]) -> Result<Coloring, ColoringError> {
    let m = d.pieces.len();
    if piece_colorings.len() != m
        || d.pieces
            .iter()
            .zip(piece_colorings)
            .any(|(p, c)| p.vertices.len() != c.n() || !c.is_total())
    {
        return Err(ColoringError::PieceMismatch);
    }
    let k = piece_colorings.iter().map(Coloring::k).max().unwrap_or(4).max(2);
    let mut out: Vec<Option<usize>> = vec![None; d.n];
    if m == 0 {
        return Ok(Coloring::empty(d.n, k));
    }
    let place = |out: &mut Vec<Option<usize>>, piece: usize, perm: &[usize]| -> Result<(), ColoringError> {
        for (local, &v) in d.pieces[piece].vertices.iter().enumerate() {
            let c = perm[piece_colorings[piece].get(local).unwrap()];
            match out[v] {
                Some(old) if old != c => return Err(ColoringError::PieceMismatch),
                _ => out[v] = Some(c),
            }
        }
        Ok(())
    };
    let identity: Vec<usize> = (0..k).collect();
    place(&mut out, 0, &identity)?;
    let mut done = vec![false; m];
    done[0] = true;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head];
        head += 1;
        for l in &d.links {
            let child = if l.a == cur {
                l.b
            } else if l.b == cur {
                l.a
            } else {
                continue;
            };
            if done[child] {
                continue;
            }
            let pair = d.pairs[l.pair];
            let pc = &piece_colorings[child];
            let cp = &d.pieces[child];
            let cx = pc.get(cp.local(pair.u).unwrap()).unwrap();
            let cy = pc.get(cp.local(pair.v).unwrap()).unwrap();
            if cx == cy {
                return Err(ColoringError::InconsistentPair(pair.u, pair.v, child));
            }
            let (px, py) = (out[pair.u].unwrap(), out[pair.v].unwrap());
            if px == py {
                return Err(ColoringError::InconsistentPair(pair.u, pair.v, cur));
            }
            let mut perm = vec![usize::MAX; k];
            perm[cx] = px;
            perm[cy] = py;
            let from: Vec<usize> = (0..k).filter(|&c| c != cx && c != cy).collect();
            let to: Vec<usize> = (0..k).filter(|&c| c != px && c != py).collect();
            for (f, t) in from.into_iter().zip(to) {
                perm[f] = t;
            }
            place(&mut out, child, &perm)?;
            done[child] = true;
            queue.push(child);
        }
    }
    let colors: Option<Vec<usize>> = out.into_iter().collect();
    colors
        .map(|c| Coloring::total(c, k))
        .ok_or(ColoringError::PieceMismatch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{validate_simple_polygon, Point};
    use crate::graph::tests::{complete, figure1};
    use crate::graph::{BottleneckPair, Piece, PieceLink};

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        validate_simple_polygon(c.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
    }

    fn fig1_poly() -> SimplePolygon {
        poly(&[(-5, 0), (-5, 3), (2, 2), (9, 3), (9, 0), (2, 1)])
    }

    #[test]
    fn three_color_examples() {
        let t = three_color(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!(t.to_vec().unwrap(), vec![0, 1, 2]);
        assert!(three_color(&poly(&[(0, 0), (4, 0), (4, 4), (0, 4)])).is_none());
        assert!(three_color(&fig1_poly()).is_none());
    }

    #[test]
    fn three_color_zigzag() {
        let p = poly(&[(0, 0), (6, 0), (6, 1), (5, 3), (4, 1), (3, 3), (2, 1), (1, 3), (0, 1)]);
        let g = visibility_graph(&p);
        let oracle = crate::graph::brute_force_coloring(&g, 3);
        let got = three_color(&p);
        assert_eq!(got.is_some(), oracle.is_some());
        if let Some(c) = got {
            assert!(is_proper(&g, &c));
        }
    }

    #[test]
    fn four_color_examples() {
        let pent = four_color(&complete(5)).unwrap();
        assert_eq!(pent.verdict, Verdict::NotColourable);
        assert_eq!(pent.witness, Witness::Clique(vec![0, 1, 2, 3, 4]));

        let f = four_color(&figure1()).unwrap();
        assert_eq!(f.verdict, Verdict::Colourable);
        let c = f.coloring.unwrap();
        assert_eq!(c.classes(), vec![vec![0, 4], vec![1, 3], vec![2], vec![5]]);

        let sq = four_color_polygon(&poly(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        assert_eq!(sq.coloring.unwrap().used(), 4);
        let pentagon = poly(&[(2, 0), (4, 1), (3, 3), (1, 3), (0, 1)]);
        assert_eq!(four_color_polygon(&pentagon).unwrap().verdict, Verdict::NotColourable);
        let fp = four_color_polygon(&fig1_poly()).unwrap();
        assert_eq!(fp.verdict, Verdict::Colourable);
        assert_eq!(fp.coloring.unwrap().classes().len(), 4);
    }

    #[test]
    fn four_color_stalls_without_triangles() {
        let c6 = crate::graph::tests::cycle(6);
        assert_eq!(four_color(&c6).unwrap().verdict, Verdict::PromiseViolated);
        let mut two = VisGraph::new(4);
        two.add_edge(0, 1);
        two.add_edge(2, 3);
        assert_eq!(four_color(&two), Err(GraphError::GraphDisconnected));
    }

    #[test]
    fn graph_three_color() {
        let out = three_color_graph(&complete(3)).unwrap();
        assert_eq!(out.verdict, Verdict::Colourable);
        assert_eq!(three_color_graph(&figure1()).unwrap().verdict, Verdict::NotColourable);
        assert_eq!(three_color_graph(&complete(4)).unwrap().verdict, Verdict::NotColourable);
    }

    fn bow_tie_decomposition() -> Decomposition {
        let g = VisGraph::from_edges(4, &[(0, 1)], &[(1, 2), (2, 0), (0, 3), (3, 1)]);
        crate::graph::decompose(&g).unwrap()
    }

    #[test]
    fn glue_single_piece_is_identity() {
        let g = figure1();
        let d = crate::graph::decompose(&g).unwrap();
        let c = Coloring::total(vec![3, 1, 2, 1, 3, 0], 4);
        assert_eq!(glue_colorings(&d, std::slice::from_ref(&c)).unwrap(), c);
    }

    #[test]
    fn glue_bow_tie() {
        // pieces [u=0, v=1, a=2] and [u=0, v=1, b=3]
        let d = bow_tie_decomposition();
        let first = Coloring::total(vec![0, 1, 2], 4);
        let second = Coloring::total(vec![1, 2, 0], 4);
        let merged = glue_colorings(&d, &[first, second]).unwrap();
        assert_eq!(merged.to_vec().unwrap(), vec![0, 1, 2, 2]);
    }

    #[test]
    fn glue_rejects_monochromatic_pair() {
        let d = bow_tie_decomposition();
        let first = Coloring::total(vec![0, 1, 2], 4);
        let bad = Coloring::total(vec![1, 1, 0], 4);
        assert_eq!(
            glue_colorings(&d, &[first, bad]),
            Err(ColoringError::InconsistentPair(0, 1, 1))
        );
        let manual = Decomposition {
            n: 2,
            pieces: vec![Piece {
                vertices: vec![0, 1],
                graph: complete(2),
            }],
            pairs: vec![BottleneckPair { u: 0, v: 1 }],
            pair_links: vec![vec![0]],
            links: Vec::<PieceLink>::new(),
        };
        assert_eq!(glue_colorings(&manual, &[]), Err(ColoringError::PieceMismatch));
    }
}
