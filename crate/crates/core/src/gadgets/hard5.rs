use std::fmt;

use super::InputGraph;
use crate::error::GadgetError;
use crate::exec::Exec;
use crate::geom::{int, validate_simple_polygon, Point, PolygonWithHoles, Rational, SimplePolygon};
use crate::visibility::visible_pairs;

/// Horizontal width of every pinhole, in grid units.
pub const PINHOLE: i64 = 6;

/// Documented constant `c` of the grid bound: the bounding box side of a
/// generated instance is at most `c * n^3` for the acceptance graphs.
pub const GRID_CONSTANT: i64 = 256;

/// The sawtooth polygon for a graph `h` together with the roles of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hard5Instance {
    pub polygon: SimplePolygon,
    /// Normalised edges of `h`, in pocket order.
    pub edges: Vec<(usize, usize)>,
    /// Polygon index of the tooth apex of each vertex of `h`.
    pub tooth_of: Vec<usize>,
    /// Polygon indices of `p1..p5` for each edge.
    pub pocket_of: Vec<[usize; 5]>,
    /// First polygon index of the top chain and its length.
    pub top: (usize, usize),
}

impl Hard5Instance {
    pub fn n(&self) -> usize {
        self.tooth_of.len()
    }

    /// Side length of the bounding box.
    pub fn grid_side(&self) -> Rational {
        let v = self.polygon.vertices();
        let span = |f: fn(&Point) -> &Rational| {
            let lo = v.iter().map(f).min().unwrap();
            let hi = v.iter().map(f).max().unwrap();
            hi - lo
        };
        span(|p| &p.x).max(span(|p| &p.y))
    }

    /// Top chain indices in boundary order.
    pub fn top_chain(&self) -> Vec<usize> {
        let len = self.polygon.len();
        (0..self.top.1).map(|k| (self.top.0 + k) % len).collect()
    }
}

/// A structural claim of the construction that does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hard5Failure {
    /// The top chain does not have `3n + 2` vertices or misses an apex.
    TopChain { expected: usize, found: usize },
    /// (a) a top chain vertex misses `p1` or `p5` of a pocket.
    LipHidden { edge: usize, top: usize, vertex: usize },
    /// (b) `p2` or `p3` sees a vertex outside its pocket other than `v_j`,
    /// or misses `v_j`.
    LeftCorner {
        edge: usize,
        vertex: usize,
        other: usize,
        sees: bool,
    },
    /// (c) `p4` sees a vertex outside its pocket other than `v_i`, or misses `v_i`.
    RightCorner { edge: usize, other: usize, sees: bool },
    /// (d) a pair inside one of the two 5-tuples is not visible.
    MissingClique { edge: usize, a: usize, b: usize },
}

impl Hard5Failure {
    pub fn clause(&self) -> &'static str {
        match self {
            Hard5Failure::TopChain { .. } => "top",
            Hard5Failure::LipHidden { .. } => "a",
            Hard5Failure::LeftCorner { .. } => "b",
            Hard5Failure::RightCorner { .. } => "c",
            Hard5Failure::MissingClique { .. } => "d",
        }
    }
}

impl fmt::Display for Hard5Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verb = |sees: bool| if sees { "sees" } else { "does not see" };
        match self {
            Hard5Failure::TopChain { expected, found } => {
                write!(f, "clause top: top chain has {found} vertices, expected {expected}")
            }
            Hard5Failure::LipHidden { edge, top, vertex } => {
                write!(
                    f,
                    "clause a: pocket {edge}: top vertex {top} does not see vertex {vertex}"
                )
            }
            Hard5Failure::LeftCorner {
                edge,
                vertex,
                other,
                sees,
            } => {
                write!(
                    f,
                    "clause b: pocket {edge}: vertex {vertex} {} vertex {other}",
                    verb(*sees)
                )
            }
            Hard5Failure::RightCorner { edge, other, sees } => {
                write!(f, "clause c: pocket {edge}: p4 {} vertex {other}", verb(*sees))
            }
            Hard5Failure::MissingClique { edge, a, b } => {
                write!(f, "clause d: pocket {edge}: vertices {a} and {b} do not see each other")
            }
        }
    }
}

/// Integer layout parameters derived from `n` and the edge count.
struct Layout {
    w: i64,
    s: i64,
    g: i64,
    pitch: i64,
    q: i64,
    width: i64,
    k: i64,
    height: i64,
}

impl Layout {
    fn new(n: usize, m: usize) -> Layout {
        let (n, m) = (n as i64, m as i64);
        let w = PINHOLE;
        let s = 4 * w * (m + 1) + 8;
        let pitch = 3 * s;
        let total = pitch * (n + 1);
        let q = ceil_to(div_ceil(total, m + 1), 2 * w);
        let width = q * (m + 1);
        Layout {
            w,
            s,
            g: s / 2,
            pitch,
            q,
            width,
            k: 2 * s * s,
            height: 0,
        }
    }

    fn top_y(&self, x: i64) -> i64 {
        let d = 2 * x - self.width;
        self.height + (d * d).div_euclid(4 * self.k)
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

fn ceil_to(a: i64, step: i64) -> i64 {
    div_ceil(a, step) * step
}

type IPt = (i64, i64);

/// Where the line from `c` to `v` crosses the line `a b`, as a fraction
/// `num / den` of `a -> b` with `den > 0`.
fn crossing(c: IPt, v: IPt, a: IPt, b: IPt) -> Option<(i128, i128)> {
    let (dx, dy) = ((v.0 - c.0) as i128, (v.1 - c.1) as i128);
    let (ex, ey) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let num = (c.0 - a.0) as i128 * dy - (c.1 - a.1) as i128 * dx;
    let den = ex * dy - ey * dx;
    match den.signum() {
        0 => None,
        1 => Some((num, den)),
        _ => Some((-num, -den)),
    }
}

fn turn(a: IPt, b: IPt, c: IPt) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

fn collinear(a: IPt, b: IPt, c: IPt) -> bool {
    turn(a, b, c) == 0
}

fn left_turn(a: IPt, b: IPt, c: IPt) -> bool {
    turn(a, b, c) > 0
}

/// Strictly between `lo` and `hi` percent.
fn within(t: Option<(i128, i128)>, lo: i128, hi: i128) -> bool {
    t.is_some_and(|(num, den)| num * 100 > lo * den && num * 100 < hi * den)
}

/// Sees only `target` through the lip, with a safety margin on both sides.
fn aims_at(c: IPt, p1: IPt, p5: IPt, tops: &[IPt], target: usize) -> bool {
    tops.iter().enumerate().all(|(k, &v)| {
        let t = crossing(c, v, p1, p5);
        if k == target {
            within(t, 15, 85)
        } else {
            t.is_some() && !within(t, -10, 110)
        }
    })
}

/// Lattice points below the lip, row by row, around the line from `v` through
/// the middle of the lip.
fn candidates(p1: IPt, p5: IPt, v: IPt, depths: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = IPt> {
    let (mx, my) = ((p1.0 + p5.0) as f64 / 2.0, (p1.1 + p5.1) as f64 / 2.0);
    let reach = 4 * PINHOLE;
    depths.flat_map(move |d| {
        let y = p1.1.min(p5.1) - d;
        let est = (mx + (mx - v.0 as f64) * (my - y as f64) / (v.1 as f64 - my)).round() as i64;
        (est - reach..=est + reach).map(move |x| (x, y))
    })
}

/// `p2`, `p3`, `p4` of the pocket for edge `(i, j)`, given as positions of
/// the two apexes in `tops`, the top chain from left to right.
///
/// `p3` is placed so that its sightline to the top vertex just left of
/// `v_j` misses `p1` by less than one unit; `p2` sits above it on the
/// blocked side.
fn pocket_corners(
    (prev, next): (IPt, IPt),
    p1: IPt,
    p5: IPt,
    tops: &[IPt],
    (i, j): (usize, usize),
    max_depth: i64,
) -> Option<[IPt; 3]> {
    let wider = (p1.0 - 1, p1.1);
    let left = tops[j - 1];
    let rest: Vec<IPt> = tops
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != j - 1)
        .map(|(_, &v)| v)
        .collect();
    let target = j - 1;
    let blocked = |c: IPt| crossing(c, left, p1, p5).is_some_and(|(num, _)| num < 0);
    let lip = p1.1.min(p5.1);
    let tight = candidates(p1, p5, tops[j], 2..=max_depth)
        .filter(|&c| blocked(c) && within(crossing(c, left, wider, p5), 0, 100) && aims_at(c, p1, p5, &rest, target));
    for p3 in tight {
        let Some(p2) = candidates(p1, p5, tops[j], 1..=lip - p3.1 - 1).find(|&c| {
            left_turn(p1, c, p3)
                && !collinear(prev, p1, c)
                && !collinear(prev, wider, c)
                && !collinear(wider, c, p3)
                && blocked(c)
                && aims_at(c, p1, p5, &rest, target)
        }) else {
            continue;
        };
        let p4 = candidates(p1, p5, tops[i], 1..=max_depth).find(|&c| {
            left_turn(p2, p3, c)
                && left_turn(p3, c, p5)
                && left_turn(c, p5, p1)
                && !collinear(c, p5, next)
                && aims_at(c, p1, p5, tops, i)
        });
        if let Some(p4) = p4 {
            return Some([p2, p3, p4]);
        }
    }
    None
}

/// Builds the sawtooth polygon of `h` and checks it with [`verify_hard5`].
pub fn gen_hard5(h: &InputGraph) -> Result<Hard5Instance, GadgetError> {
    let inst = layout_hard5(h)?;
    let fails = verify_hard5(&inst);
    if let Some(f) = fails.first() {
        return Err(GadgetError::GenerationFailed(format!(
            "{} violations, first: {f}",
            fails.len()
        )));
    }
    Ok(inst)
}

fn layout_hard5(h: &InputGraph) -> Result<Hard5Instance, GadgetError> {
    let n = h.n();
    if n == 0 {
        return Err(GadgetError::InvalidInput("graph has no vertices".into()));
    }
    let edges = h.edges().to_vec();
    let m = edges.len();
    let mut lay = Layout::new(n, m);
    let (w, mi) = (lay.w, m as i64);
    let rise = |num: i64, len: i64| {
        debug_assert_eq!((num * len) % w, 0);
        (num * len) / w
    };

    // bottom hill: slopes (in units of 1/w) fall by one at every exposed vertex
    let mut lips = Vec::with_capacity(m);
    let mut cur = (0i64, 0i64);
    for e in 1..=mi {
        let x1 = lay.q * e - w;
        let p1 = (x1, cur.1 + rise(mi - 2 * (e - 1), x1 - cur.0));
        let p5 = (x1 + w, p1.1 + rise(mi - 2 * e + 1, w));
        lips.push((p1, p5));
        cur = p5;
    }
    let y_br = if m > 0 { cur.1 + rise(-mi, lay.width - cur.0) } else { 0 };
    let mut y_hi = y_br.max(0);
    for (a, b) in &lips {
        y_hi = y_hi.max(a.1).max(b.1);
    }
    lay.height = 3 * lay.width * mi.max(w) / w + y_hi;

    // top U with one tooth per vertex
    let mut teeth = Vec::with_capacity(n);
    for k in 0..n as i64 {
        let xk = lay.pitch * (k + 1);
        let (xl, xr) = (xk - lay.s, xk + lay.s);
        let (yl, yr) = (lay.top_y(xl), lay.top_y(xr));
        let apex = (xk, (yl + yr).div_euclid(2) + lay.g);
        teeth.push(((xl, yl), apex, (xr, yr)));
    }
    let tl = (0, lay.top_y(0));
    let tr = (lay.width, lay.top_y(lay.width));

    // pockets: corners are the first lattice points whose sightlines cross
    // the lip at the right places
    let mut tops = vec![tl];
    for &(l, v, r) in &teeth {
        tops.extend([l, v, r]);
    }
    tops.push(tr);
    let around = |e: usize| {
        let prev = if e == 0 { (0, 0) } else { lips[e - 1].1 };
        let next = lips.get(e + 1).map_or((lay.width, y_br), |l| l.0);
        (prev, next)
    };
    let mut pts: Vec<(Rational, Rational)> = vec![(int(0), int(0))];
    let mut pocket_of = Vec::with_capacity(m);
    for (e, &(i, j)) in edges.iter().enumerate() {
        let (p1, p5) = lips[e];
        let [p2, p3, p4] = pocket_corners(around(e), p1, p5, &tops, (3 * i + 2, 3 * j + 2), lay.width)
            .ok_or_else(|| GadgetError::GenerationFailed(format!("no corner placement for pocket {e}")))?;
        let base = pts.len();
        for p in [p1, p2, p3, p4, p5] {
            pts.push((int(p.0), int(p.1)));
        }
        pocket_of.push([base, base + 1, base + 2, base + 3, base + 4]);
    }
    pts.push((int(lay.width), int(y_br)));
    let top_start = pts.len();
    pts.push((int(tr.0), int(tr.1)));
    let mut tooth_of = vec![0; n];
    for k in (0..n).rev() {
        let (l, v, r) = teeth[k];
        pts.push((int(r.0), int(r.1)));
        tooth_of[k] = pts.len();
        pts.push((int(v.0), int(v.1)));
        pts.push((int(l.0), int(l.1)));
    }
    pts.push((int(tl.0), int(tl.1)));
    let top_len = pts.len() - top_start;

    let vertices: Vec<Point> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
    let polygon = validate_simple_polygon(vertices.clone())?;
    if polygon.vertices() != vertices.as_slice() {
        return Err(GadgetError::GenerationFailed("layout came out clockwise".into()));
    }
    Ok(Hard5Instance {
        polygon,
        edges,
        tooth_of,
        pocket_of,
        top: (top_start, top_len),
    })
}

pub fn verify_hard5(inst: &Hard5Instance) -> Vec<Hard5Failure> {
    verify_hard5_with(inst, Exec::default())
}

/// Checks every visibility claim the 5-colouring argument relies on.
///
/// Failures come back grouped by pocket, in clause order.
pub fn verify_hard5_with(inst: &Hard5Instance, exec: Exec) -> Vec<Hard5Failure> {
    let mut fails = Vec::new();
    let n = inst.n();
    let chain = inst.top_chain();
    let expected = 3 * n + 2;
    let bottom = inst.polygon.len().saturating_sub(inst.top.1);
    let teeth_inside = inst.tooth_of.iter().all(|t| chain.contains(t));
    if inst.top.1 != expected || !teeth_inside || bottom != 5 * inst.edges.len() + 2 {
        fails.push(Hard5Failure::TopChain {
            expected,
            found: inst.top.1,
        });
    }

    // one batch of vertex pairs, consumed in the same order below
    let len = inst.polygon.len();
    let mut pairs = Vec::new();
    for (e, q) in inst.pocket_of.iter().enumerate() {
        for &t in &chain {
            pairs.push((t, q[0]));
            pairs.push((t, q[4]));
        }
        for &c in &q[1..4] {
            for o in (0..len).filter(|o| !q.contains(o)) {
                pairs.push((c, o));
            }
        }
        let tj = inst.tooth_of[inst.edges[e].1];
        for tuple in [[tj, q[0], q[1], q[2], q[4]], *q] {
            for a in 0..5 {
                for b in a + 1..5 {
                    pairs.push((tuple[a], tuple[b]));
                }
            }
        }
    }
    let pwh = PolygonWithHoles::from(inst.polygon.clone());
    let seen = visible_pairs(&pwh, &pairs, exec);
    let mut it = pairs.iter().zip(seen);
    for (e, &(i, j)) in inst.edges.iter().enumerate() {
        let q = inst.pocket_of[e];
        for _ in 0..2 * chain.len() {
            let (&(t, p), vis) = it.next().unwrap();
            if !vis {
                fails.push(Hard5Failure::LipHidden {
                    edge: e,
                    top: t,
                    vertex: p,
                });
            }
        }
        for slot in 1..4 {
            let aim = inst.tooth_of[if slot == 3 { i } else { j }];
            for _ in 0..len - 5 {
                let (&(c, o), vis) = it.next().unwrap();
                if vis == (o == aim) {
                    continue;
                }
                fails.push(if slot == 3 {
                    Hard5Failure::RightCorner {
                        edge: e,
                        other: o,
                        sees: vis,
                    }
                } else {
                    Hard5Failure::LeftCorner {
                        edge: e,
                        vertex: c,
                        other: o,
                        sees: vis,
                    }
                });
            }
        }
        debug_assert!(q.iter().all(|&v| v < len));
        for _ in 0..20 {
            let (&(a, b), vis) = it.next().unwrap();
            if !vis {
                fails.push(Hard5Failure::MissingClique { edge: e, a, b });
            }
        }
    }
    fails
}
