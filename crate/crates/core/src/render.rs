//! Deterministic SVG drawings of polygons, colourings and edge overlays.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::geom::{Point, PolygonWithHoles};
use crate::graph::Coloring;
use crate::visibility::VisGraph;

/// Fill colours, used together with [`SHAPES`] so that colour classes stay
/// apart without colour vision.
pub const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Node shape of each palette entry.
pub const SHAPES: [&str; 6] = ["circle", "square", "triangle", "diamond", "triangle-down", "hexagon"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMode {
    /// Every visibility edge.
    Visibility,
    /// Visibility edges that are not boundary edges.
    Chords,
    None,
}

impl EdgeMode {
    /// Edges of `g` selected by the mode.
    pub fn select(self, g: &VisGraph) -> Vec<(usize, usize)> {
        match self {
            EdgeMode::Visibility => g.edges(),
            EdgeMode::Chords => g.edges().into_iter().filter(|&(u, v)| !g.is_boundary(u, v)).collect(),
            EdgeMode::None => Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub polygon: PolygonWithHoles,
    pub coloring: Option<Coloring>,
    pub edges: Vec<(usize, usize)>,
    /// Width of the canvas in pixels; the height follows the aspect ratio.
    pub size: u32,
}

impl RenderSpec {
    pub fn new(polygon: PolygonWithHoles) -> Self {
        RenderSpec {
            polygon,
            coloring: None,
            edges: Vec::new(),
            size: 800,
        }
    }

    /// Fails when the colouring does not cover exactly the polygon's vertices.
    pub fn with_coloring(mut self, c: Coloring) -> Result<Self, String> {
        let n = self.polygon.vertex_count();
        if c.n() != n {
            return Err(format!("colouring has {} vertices, polygon has {n}", c.n()));
        }
        self.coloring = Some(c);
        Ok(self)
    }

    pub fn with_edges(mut self, edges: Vec<(usize, usize)>) -> Self {
        self.edges = edges;
        self
    }
}

fn f(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn to_xy(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), -p.y.to_f64().unwrap_or(0.0))
}

fn marker(out: &mut String, shape: &str, (x, y): (f64, f64), r: f64, fill: &str) {
    let poly = |out: &mut String, pts: &[(f64, f64)]| {
        let s: Vec<String> = pts
            .iter()
            .map(|(a, b)| format!("{},{}", f(x + a * r), f(y + b * r)))
            .collect();
        writeln!(
            out,
            "<polygon class=\"node\" points=\"{}\" fill=\"{fill}\"/>",
            s.join(" ")
        )
        .unwrap();
    };
    match shape {
        "circle" => writeln!(
            out,
            "<circle class=\"node\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
            f(x),
            f(y),
            f(r)
        )
        .unwrap(),
        "square" => poly(out, &[(-0.85, -0.85), (0.85, -0.85), (0.85, 0.85), (-0.85, 0.85)]),
        "triangle" => poly(out, &[(0.0, -1.2), (1.1, 0.8), (-1.1, 0.8)]),
        "diamond" => poly(out, &[(0.0, -1.2), (1.2, 0.0), (0.0, 1.2), (-1.2, 0.0)]),
        "triangle-down" => poly(out, &[(0.0, 1.2), (1.1, -0.8), (-1.1, -0.8)]),
        _ => poly(
            out,
            &[
                (1.0, 0.0),
                (0.5, 0.87),
                (-0.5, 0.87),
                (-1.0, 0.0),
                (-0.5, -0.87),
                (0.5, -0.87),
            ],
        ),
    }
}

/// Renders the drawing. Equal specs give byte-identical output.
pub fn render_svg(spec: &RenderSpec) -> String {
    let pts: Vec<(f64, f64)> = spec.polygon.vertices().iter().map(to_xy).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let side = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = 0.05 * side;
    let (vx, vy, vw, vh) = (x0 - margin, y0 - margin, x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let unit = side / 200.0;
    let height = (f64::from(spec.size) * vh / vw).round().max(1.0) as u32;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{height}\" viewBox=\"{} {} {} {}\">",
        spec.size,
        f(vx),
        f(vy),
        f(vw),
        f(vh)
    )
    .unwrap();

    let mut d = String::new();
    let mut base = 0;
    let mut rings = Vec::new();
    for ring in spec.polygon.rings() {
        let idx: Vec<usize> = (base..base + ring.len()).collect();
        base += ring.len();
        for (k, &i) in idx.iter().enumerate() {
            let (x, y) = pts[i];
            write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, f(x), f(y)).unwrap();
        }
        d.push_str("Z ");
        rings.push(idx);
    }
    writeln!(
        out,
        "<path class=\"region\" d=\"{}\" fill=\"#f2f2f2\" fill-rule=\"evenodd\" stroke=\"none\"/>",
        d.trim_end()
    )
    .unwrap();

    for &(u, v) in &spec.edges {
        let ((ax, ay), (bx, by)) = (pts[u], pts[v]);
        writeln!(
            out,
            "<line class=\"edge\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#5fa8d3\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
            f(ax),
            f(ay),
            f(bx),
            f(by),
            f(0.6 * unit),
            f(2.0 * unit),
            f(1.5 * unit)
        )
        .unwrap();
    }

    for idx in &rings {
        for k in 0..idx.len() {
            let ((ax, ay), (bx, by)) = (pts[idx[k]], pts[idx[(k + 1) % idx.len()]]);
            writeln!(
                out,
                "<line class=\"boundary\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"{}\"/>",
                f(ax),
                f(ay),
                f(bx),
                f(by),
                f(unit)
            )
            .unwrap();
        }
    }

    for (i, &p) in pts.iter().enumerate() {
        match spec.coloring.as_ref().and_then(|c| c.get(i)) {
            Some(c) => marker(
                &mut out,
                SHAPES[c % SHAPES.len()],
                p,
                2.5 * unit,
                PALETTE[c % PALETTE.len()],
            ),
            None => marker(&mut out, "circle", p, 1.8 * unit, "#ffffff"),
        }
    }
    out.push_str("</svg>\n");
    out
}
