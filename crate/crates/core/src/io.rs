//! Whitespace-delimited text formats.
//!
//! Every format skips blank lines and treats `#` up to the end of a line as a
//! comment. Coordinates are integers or `a/b` rationals. Writers emit no
//! comments, so `write(read(text)) == text` for any file they produced.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{IoError, ParseError};
use crate::gadgets::{ChannelKind, ChannelPlacement, GridEdge, Hard4hInstance, Hard5Instance, HexEmbedding, Node};
use crate::geom::{validate_polygon_with_holes, Point, PolygonWithHoles, Rational, SimplePolygon};
use crate::graph::Coloring;
use crate::visibility::VisGraph;

/// Non-empty lines as token lists, with 1-based line numbers.
struct Reader<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader {
            lines: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.lines.by_ref() {
            self.last = i + 1;
            let body = line.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if !toks.is_empty() {
                return Some((i + 1, toks));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let last = self.last;
        self.next()
            .ok_or_else(|| ParseError::new(last + 1, format!("unexpected end of input, expected {what}")))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.next() {
            None => Ok(()),
            Some((l, t)) => Err(ParseError::new(l, format!("unexpected `{}`", t.join(" ")))),
        }
    }
}

fn arity(line: usize, toks: &[&str], n: usize, what: &str) -> Result<(), ParseError> {
    if toks.len() == n {
        Ok(())
    } else {
        Err(ParseError::new(
            line,
            format!("{what}: expected {n} fields, found {}", toks.len()),
        ))
    }
}

fn header<'a>(r: &mut Reader<'a>, keyword: &str, n: usize) -> Result<(usize, Vec<&'a str>), ParseError> {
    let (l, t) = r.expect(&format!("`{keyword}` header"))?;
    if t[0] != keyword {
        return Err(ParseError::new(l, format!("expected `{keyword}`, found `{}`", t[0])));
    }
    arity(l, &t, n + 1, keyword)?;
    Ok((l, t))
}

fn num<T: FromStr>(line: usize, tok: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("bad number `{tok}`")))
}

fn index(line: usize, tok: &str, bound: usize) -> Result<usize, ParseError> {
    let i: usize = num(line, tok)?;
    if i >= bound {
        return Err(ParseError::new(line, format!("index {i} out of range (< {bound})")));
    }
    Ok(i)
}

pub fn parse_rational(line: usize, tok: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::new(line, format!("bad coordinate `{tok}`"));
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseError::new(line, format!("zero denominator in `{tok}`")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn point_line(line: usize, toks: &[&str]) -> Result<Point, ParseError> {
    arity(line, toks, 2, "coordinate line")?;
    Ok(Point::new(
        parse_rational(line, toks[0])?,
        parse_rational(line, toks[1])?,
    ))
}

fn write_ring(out: &mut String, keyword: &str, ring: &[Point]) {
    writeln!(out, "{keyword} {}", ring.len()).unwrap();
    for p in ring {
        writeln!(out, "{} {}", format_rational(&p.x), format_rational(&p.y)).unwrap();
    }
}

pub fn write_polygon(p: &PolygonWithHoles) -> String {
    let mut out = String::new();
    write_ring(&mut out, "polygon", p.outer().vertices());
    for h in p.holes() {
        write_ring(&mut out, "hole", h);
    }
    out
}

pub fn write_simple_polygon(p: &SimplePolygon) -> String {
    write_polygon(&PolygonWithHoles::from(p.clone()))
}

/// Reads and validates a polygon, possibly with holes.
pub fn read_polygon(text: &str) -> Result<PolygonWithHoles, IoError> {
    let mut r = Reader::new(text);
    let (l, t) = header(&mut r, "polygon", 1)?;
    let n: usize = num(l, t[1])?;
    let mut outer = Vec::with_capacity(n);
    for _ in 0..n {
        let (l, t) = r.expect("a coordinate line")?;
        outer.push(point_line(l, &t)?);
    }
    let mut holes = Vec::new();
    while let Some((l, t)) = r.next() {
        if t[0] != "hole" {
            return Err(ParseError::new(l, format!("expected `hole`, found `{}`", t[0])).into());
        }
        arity(l, &t, 2, "hole")?;
        let m: usize = num(l, t[1])?;
        let mut ring = Vec::with_capacity(m);
        for _ in 0..m {
            let (l, t) = r.expect("a coordinate line")?;
            ring.push(point_line(l, &t)?);
        }
        holes.push(ring);
    }
    Ok(validate_polygon_with_holes(outer, holes)?)
}

/// Reads a polygon file that must not declare holes.
pub fn read_simple_polygon(text: &str) -> Result<SimplePolygon, IoError> {
    let p = read_polygon(text)?;
    if !p.holes().is_empty() {
        let line = text
            .lines()
            .position(|l| l.split('#').next().unwrap_or("").trim_start().starts_with("hole"));
        return Err(ParseError::new(line.map_or(0, |l| l + 1), "holes are not allowed here").into());
    }
    Ok(p.outer().clone())
}

pub fn write_graph(g: &VisGraph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    writeln!(out, "graph {} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    let boundary = g.boundary_edges();
    if !boundary.is_empty() {
        writeln!(out, "boundary {}", boundary.len()).unwrap();
        for (u, v) in boundary {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

fn edge_line(line: usize, toks: &[&str], n: usize) -> Result<(usize, usize), ParseError> {
    arity(line, toks, 2, "edge line")?;
    let (u, v) = (index(line, toks[0], n)?, index(line, toks[1], n)?);
    if u == v {
        return Err(ParseError::new(line, format!("loop at {u}")));
    }
    Ok((u.min(v), u.max(v)))
}

pub fn read_graph(text: &str) -> Result<VisGraph, ParseError> {
    let mut r = Reader::new(text);
    let (l, t) = header(&mut r, "graph", 2)?;
    let (n, m): (usize, usize) = (num(l, t[1])?, num(l, t[2])?);
    let mut g = VisGraph::new(n);
    for _ in 0..m {
        let (l, t) = r.expect("an edge line")?;
        let (u, v) = edge_line(l, &t, n)?;
        if g.has_edge(u, v) {
            return Err(ParseError::new(l, format!("repeated edge {u} {v}")));
        }
        g.add_edge(u, v);
    }
    if let Some((l, t)) = r.next() {
        if t[0] != "boundary" {
            return Err(ParseError::new(l, format!("expected `boundary`, found `{}`", t[0])));
        }
        arity(l, &t, 2, "boundary")?;
        let k: usize = num(l, t[1])?;
        for _ in 0..k {
            let (l, t) = r.expect("a boundary edge line")?;
            let (u, v) = edge_line(l, &t, n)?;
            if !g.has_edge(u, v) {
                return Err(ParseError::new(l, format!("boundary edge {u} {v} is not an edge")));
            }
            g.add_boundary_edge(u, v);
        }
        r.finish()?;
    }
    Ok(g)
}

/// Uncoloured vertices are written as `-`.
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    writeln!(out, "coloring {} {}", c.n(), c.k()).unwrap();
    for v in 0..c.n() {
        match c.get(v) {
            Some(col) => writeln!(out, "{v} {col}").unwrap(),
            None => writeln!(out, "{v} -").unwrap(),
        }
    }
    out
}

pub fn read_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut r = Reader::new(text);
    let (l, t) = header(&mut r, "coloring", 2)?;
    let (n, k): (usize, usize) = (num(l, t[1])?, num(l, t[2])?);
    let mut c = Coloring::empty(n, k);
    let mut seen = vec![false; n];
    for _ in 0..n {
        let (l, t) = r.expect("a colour line")?;
        arity(l, &t, 2, "colour line")?;
        let v = index(l, t[0], n)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(ParseError::new(l, format!("vertex {v} listed twice")));
        }
        if t[1] != "-" {
            c.set(v, index(l, t[1], k)?);
        }
    }
    r.finish()?;
    Ok(c)
}

fn node(line: usize, q: &str, r: &str) -> Result<Node, ParseError> {
    Ok((num(line, q)?, num(line, r)?))
}

fn grid_edge(line: usize, toks: &[&str]) -> Result<GridEdge, ParseError> {
    let a = node(line, toks[0], toks[1])?;
    let b = node(line, toks[2], toks[3])?;
    Ok((a.min(b), a.max(b)))
}

pub fn write_embedding(emb: &HexEmbedding) -> String {
    let mut out = String::new();
    for (v, tree) in emb.trees.iter().enumerate() {
        for ((q1, r1), (q2, r2)) in tree {
            writeln!(out, "tree {v} {q1} {r1} {q2} {r2}").unwrap();
        }
    }
    for ((u, v), ((q1, r1), (q2, r2))) in &emb.reps {
        writeln!(out, "rep {u} {v} {q1} {r1} {q2} {r2}").unwrap();
    }
    out
}

/// Structural checks are left to `validate_embedding`.
pub fn read_embedding(text: &str) -> Result<HexEmbedding, ParseError> {
    let mut r = Reader::new(text);
    let mut emb = HexEmbedding::default();
    while let Some((l, t)) = r.next() {
        match t[0] {
            "tree" => {
                arity(l, &t, 6, "tree")?;
                let v: usize = num(l, t[1])?;
                if emb.trees.len() <= v {
                    emb.trees.resize(v + 1, Vec::new());
                }
                emb.trees[v].push(grid_edge(l, &t[2..])?);
            }
            "rep" => {
                arity(l, &t, 7, "rep")?;
                let (u, v): (usize, usize) = (num(l, t[1])?, num(l, t[2])?);
                emb.reps.push(((u.min(v), u.max(v)), grid_edge(l, &t[3..])?));
            }
            other => return Err(ParseError::new(l, format!("unknown line `{other}`"))),
        }
    }
    Ok(emb)
}

/// A generated instance together with the roles of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetInstance {
    Hard5(Hard5Instance),
    Hard4h(Hard4hInstance),
}

impl GadgetInstance {
    pub fn polygon(&self) -> PolygonWithHoles {
        match self {
            GadgetInstance::Hard5(i) => PolygonWithHoles::from(i.polygon.clone()),
            GadgetInstance::Hard4h(i) => i.polygon.clone(),
        }
    }

    /// The provenance sidecar.
    pub fn provenance(&self) -> String {
        let mut out = String::new();
        match self {
            GadgetInstance::Hard5(i) => {
                out.push_str("provenance hard5\n");
                writeln!(out, "top {} {}", i.top.0, i.top.1).unwrap();
                for (v, t) in i.tooth_of.iter().enumerate() {
                    writeln!(out, "tooth {v} {t}").unwrap();
                }
                for ((u, v), p) in i.edges.iter().zip(&i.pocket_of) {
                    writeln!(out, "pocket {u} {v} {} {} {} {} {}", p[0], p[1], p[2], p[3], p[4]).unwrap();
                }
            }
            GadgetInstance::Hard4h(i) => {
                out.push_str("provenance hard4h\n");
                for c in &i.placements {
                    let idx: Vec<String> = c.vertices.iter().map(usize::to_string).collect();
                    let ((q1, r1), (q2, r2)) = (c.from, c.to);
                    writeln!(out, "channel {} {q1} {r1} {q2} {r2} {}", c.kind.as_str(), idx.join(" ")).unwrap();
                }
                for ((q, r), j) in &i.joins {
                    writeln!(out, "join {q} {r} {} {} {}", j[0], j[1], j[2]).unwrap();
                }
                for ((q, r), f) in &i.flags {
                    writeln!(out, "flag {q} {r} {f}").unwrap();
                }
            }
        }
        out
    }
}

/// Rebuilds an instance from its polygon file and provenance sidecar.
pub fn read_gadget(polygon: &str, provenance: &str) -> Result<GadgetInstance, IoError> {
    let mut r = Reader::new(provenance);
    let (l, t) = header(&mut r, "provenance", 1)?;
    match t[1] {
        "hard5" => read_hard5(read_simple_polygon(polygon)?, r).map(GadgetInstance::Hard5),
        "hard4h" => read_hard4h(read_polygon(polygon)?, r).map(GadgetInstance::Hard4h),
        other => Err(ParseError::new(l, format!("unknown gadget `{other}`")).into()),
    }
}

fn read_hard5(polygon: SimplePolygon, mut r: Reader<'_>) -> Result<Hard5Instance, IoError> {
    let len = polygon.len();
    let mut top = None;
    let mut tooth_of = Vec::new();
    let mut edges = Vec::new();
    let mut pocket_of = Vec::new();
    while let Some((l, t)) = r.next() {
        match t[0] {
            "top" => {
                arity(l, &t, 3, "top")?;
                let start = index(l, t[1], len)?;
                let count: usize = num(l, t[2])?;
                if count > len {
                    return Err(ParseError::new(l, "top chain longer than the polygon").into());
                }
                top = Some((start, count));
            }
            "tooth" => {
                arity(l, &t, 3, "tooth")?;
                let v: usize = num(l, t[1])?;
                if v != tooth_of.len() {
                    return Err(ParseError::new(l, format!("expected tooth {}, found {v}", tooth_of.len())).into());
                }
                tooth_of.push(index(l, t[2], len)?);
            }
            "pocket" => {
                arity(l, &t, 8, "pocket")?;
                let (u, v): (usize, usize) = (num(l, t[1])?, num(l, t[2])?);
                let mut p = [0; 5];
                for (k, slot) in p.iter_mut().enumerate() {
                    *slot = index(l, t[3 + k], len)?;
                }
                edges.push((u.min(v), u.max(v)));
                pocket_of.push(p);
            }
            other => return Err(ParseError::new(l, format!("unknown line `{other}`")).into()),
        }
    }
    let top = top.ok_or_else(|| ParseError::new(r.last, "missing `top` line"))?;
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| v >= tooth_of.len() || u == v) {
        return Err(ParseError::new(r.last, format!("pocket {u} {v} names an unknown vertex")).into());
    }
    Ok(Hard5Instance {
        polygon,
        edges,
        tooth_of,
        pocket_of,
        top,
    })
}

fn read_hard4h(polygon: PolygonWithHoles, mut r: Reader<'_>) -> Result<Hard4hInstance, IoError> {
    let len = polygon.vertex_count();
    let mut placements = Vec::new();
    let mut joins = BTreeMap::new();
    let mut flags = BTreeMap::new();
    while let Some((l, t)) = r.next() {
        match t[0] {
            "channel" => {
                if t.len() < 6 {
                    return Err(ParseError::new(l, "channel: too few fields").into());
                }
                let kind = match t[1] {
                    "vertex" => ChannelKind::Vertex,
                    "edge" => ChannelKind::Edge,
                    other => return Err(ParseError::new(l, format!("unknown channel kind `{other}`")).into()),
                };
                arity(l, &t, 6 + kind.names().len(), "channel")?;
                let from = node(l, t[2], t[3])?;
                let to = node(l, t[4], t[5])?;
                let vertices = t[6..].iter().map(|s| index(l, s, len)).collect::<Result<_, _>>()?;
                placements.push(ChannelPlacement {
                    kind,
                    from,
                    to,
                    vertices,
                });
            }
            "join" => {
                arity(l, &t, 6, "join")?;
                let at = node(l, t[1], t[2])?;
                let j = [index(l, t[3], len)?, index(l, t[4], len)?, index(l, t[5], len)?];
                if joins.insert(at, j).is_some() {
                    return Err(ParseError::new(l, format!("join {at:?} listed twice")).into());
                }
            }
            "flag" => {
                arity(l, &t, 4, "flag")?;
                let at = node(l, t[1], t[2])?;
                if flags.insert(at, index(l, t[3], len)?).is_some() {
                    return Err(ParseError::new(l, format!("flag {at:?} listed twice")).into());
                }
            }
            other => return Err(ParseError::new(l, format!("unknown line `{other}`")).into()),
        }
    }
    Ok(Hard4hInstance {
        polygon,
        placements,
        joins,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational(1, "-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rational(&ratio(8, 4)), "2");
        assert!(parse_rational(3, "1/0").is_err());
        assert!(parse_rational(3, "x").is_err());
    }

    #[test]
    fn polygon_with_comments_and_clockwise_input() {
        let text = "# figure\npolygon 6\n-5 0\n-5 3\n2 2 # C\n9 3\n9 0\n2 1\n";
        let p = read_polygon(text).unwrap();
        let out = write_polygon(&p);
        assert!(out.starts_with("polygon 6\n2 1\n"));
        assert_eq!(write_polygon(&read_polygon(&out).unwrap()), out);
    }

    #[test]
    fn hole_order_survives() {
        let text = "polygon 4\n0 0\n10 0\n10 10\n0 10\nhole 4\n3 3\n7 3\n7 7\n3 7\n";
        let p = read_polygon(text).unwrap();
        let out = write_polygon(&p);
        assert_eq!(out, "polygon 4\n0 0\n10 0\n10 10\n0 10\nhole 4\n3 7\n7 7\n7 3\n3 3\n");
        assert_eq!(read_polygon(&out).unwrap(), p);
        assert!(read_simple_polygon(text).is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = read_polygon("polygon 3\n0 0\n1 0\n").unwrap_err();
        assert_eq!(
            e,
            IoError::Parse(ParseError::new(
                4,
                "unexpected end of input, expected a coordinate line"
            ))
        );
        let e = read_graph("graph 3 1\n\n0 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = read_coloring("coloring 2 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn graph_round_trip() {
        let text = "graph 4 4\n0 1\n0 2\n1 2\n2 3\nboundary 2\n0 1\n2 3\n";
        let g = read_graph(text).unwrap();
        assert!(g.is_boundary(2, 3) && !g.is_boundary(0, 2));
        assert_eq!(write_graph(&g), text);
        assert!(read_graph("graph 3 1\n0 1\nboundary 1\n1 2\n").is_err());
    }

    #[test]
    fn coloring_round_trip() {
        let text = "coloring 3 4\n0 2\n1 -\n2 0\n";
        assert_eq!(write_coloring(&read_coloring(text).unwrap()), text);
    }

    #[test]
    fn embedding_round_trip() {
        let text = "tree 0 1 0 2 0\ntree 1 2 1 3 1\nrep 0 1 2 0 2 1\n";
        let emb = read_embedding(text).unwrap();
        assert_eq!(emb.trees.len(), 2);
        assert_eq!(write_embedding(&emb), text);
    }
}
