use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use viscolor::coloring::{four_color, three_color, three_color_graph, Verdict};
use viscolor::gadgets::{embed_in_hex_grid, gen_hard4h, gen_hard5, verify_hard4h, verify_hard5, InputGraph};
use viscolor::geom::{random_lattice_polygon, random_simple_polygon, PolygonWithHoles};
use viscolor::graph::{brute_force_coloring_budgeted, Coloring, VisGraph};
use viscolor::io::{self, GadgetInstance};
use viscolor::render::{render_svg, EdgeMode, RenderSpec};
use viscolor::visibility::visibility_graph_with_holes;

/// Environment variable capping the search nodes of the exact colouring oracle.
const BUDGET_VAR: &str = "VISCOLOR_ORACLE_NODES";
const DEFAULT_BUDGET: u64 = 50_000_000;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format 1)");

#[derive(Parser)]
#[command(name = "viscolor", version = VERSION, about = "Visibility graphs of polygons and their colourings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Visibility graph of a polygon, boundary edges marked.
    Visgraph {
        poly: PathBuf,
        /// Accept polygons with holes.
        #[arg(long)]
        holes: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// 3- or 4-colouring of a polygon or of a visibility graph.
    Color {
        input: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u8).range(3..=4))]
        k: u8,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Smallest number of colours, by exhaustive search.
    Chromatic {
        input: PathBuf,
        #[arg(long)]
        max_k: usize,
    },
    /// Sawtooth polygon whose visibility graph is 5-colourable iff the graph is 3-colourable.
    GenHard5 {
        graph: PathBuf,
        #[arg(short)]
        o: PathBuf,
        /// Provenance sidecar, `<output>.prov` by default.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Corridor polygon with holes whose visibility graph is 4-colourable iff the graph is 3-colourable.
    GenHard4h {
        graph: PathBuf,
        #[arg(required_unless_present = "auto", conflicts_with = "auto")]
        embedding: Option<PathBuf>,
        /// Search for an embedding instead of reading one.
        #[arg(long)]
        auto: bool,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Replays the structural checks of a generated instance.
    VerifyGadget { poly: PathBuf, provenance: PathBuf },
    /// SVG drawing of a polygon.
    Render {
        poly: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "none")]
        edges: Edges,
        #[arg(long, default_value_t = 800)]
        size: u32,
        #[arg(short)]
        o: PathBuf,
    },
    /// Random simple polygon with small integer coordinates.
    RandomPolygon {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Allow collinear vertex triples.
        #[arg(long)]
        lattice: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Edges {
    Visibility,
    Chords,
    None,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn budget() -> Result<u64> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("{BUDGET_VAR}={s} is not a node count")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn first_keyword(text: &str) -> Option<&str> {
    text.lines()
        .find_map(|l| l.split('#').next().unwrap_or("").split_whitespace().next())
}

enum Input {
    Polygon(PolygonWithHoles),
    Graph(VisGraph),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let ctx = || path.display().to_string();
    match first_keyword(&text) {
        Some("graph") => Ok(Input::Graph(io::read_graph(&text).with_context(ctx)?)),
        _ => Ok(Input::Polygon(io::read_polygon(&text).with_context(ctx)?)),
    }
}

fn read_graph_file(path: &Path) -> Result<InputGraph> {
    let text = read(path)?;
    let g = io::read_graph(&text).with_context(|| path.display().to_string())?;
    Ok(InputGraph::from_graph(&g))
}

fn sidecar(o: &Path, given: Option<PathBuf>) -> PathBuf {
    given.unwrap_or_else(|| {
        let mut s = o.as_os_str().to_owned();
        s.push(".prov");
        PathBuf::from(s)
    })
}

fn write_gadget(inst: &GadgetInstance, o: &Path, prov: Option<PathBuf>) -> Result<()> {
    emit(Some(o), &io::write_polygon(&inst.polygon()))?;
    emit(Some(&sidecar(o, prov)), &inst.provenance())
}

fn report(verdict: Verdict, coloring: Option<Coloring>, o: Option<&Path>) -> Result<u8> {
    match (verdict, coloring) {
        (Verdict::Colourable, Some(c)) => {
            emit(o, &io::write_coloring(&c))?;
            Ok(0)
        }
        (v, _) => {
            println!("{}", v.as_str());
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Visgraph { poly, holes, o } => {
            let text = read(&poly)?;
            let p = io::read_polygon(&text).with_context(|| poly.display().to_string())?;
            if !holes && !p.holes().is_empty() {
                bail!("{}: polygon has holes; pass --holes", poly.display());
            }
            emit(o.as_deref(), &io::write_graph(&visibility_graph_with_holes(&p)))?;
            Ok(0)
        }
        Cmd::Color { input, k, o } => {
            let (verdict, coloring) = match (read_input(&input)?, k) {
                (Input::Polygon(p), 3) if p.holes().is_empty() => match three_color(p.outer()) {
                    Some(c) => (Verdict::Colourable, Some(c)),
                    None => (Verdict::NotColourable, None),
                },
                (Input::Polygon(p), _) => {
                    let out = four_or_three(&visibility_graph_with_holes(&p), k)?;
                    (out.verdict, out.coloring)
                }
                (Input::Graph(g), _) => {
                    let out = four_or_three(&g, k)?;
                    (out.verdict, out.coloring)
                }
            };
            report(verdict, coloring, o.as_deref())
        }
        Cmd::Chromatic { input, max_k } => {
            let g = match read_input(&input)? {
                Input::Graph(g) => g,
                Input::Polygon(p) => visibility_graph_with_holes(&p),
            };
            let budget = budget()?;
            if g.n() == 0 {
                println!("0");
                return Ok(0);
            }
            for k in 1..=max_k.min(64) {
                if brute_force_coloring_budgeted(&g, k, budget)?.is_some() {
                    println!("{k}");
                    return Ok(0);
                }
            }
            println!(">{max_k}");
            Ok(1)
        }
        Cmd::GenHard5 { graph, o, provenance } => {
            let inst = gen_hard5(&read_graph_file(&graph)?)?;
            write_gadget(&GadgetInstance::Hard5(inst), &o, provenance)?;
            Ok(0)
        }
        Cmd::GenHard4h {
            graph,
            embedding,
            auto: _,
            o,
            provenance,
        } => {
            let h = read_graph_file(&graph)?;
            let emb = match embedding {
                Some(path) => io::read_embedding(&read(&path)?).with_context(|| path.display().to_string())?,
                None => embed_in_hex_grid(&h)?,
            };
            let inst = gen_hard4h(&h, &emb)?;
            write_gadget(&GadgetInstance::Hard4h(inst), &o, provenance)?;
            Ok(0)
        }
        Cmd::VerifyGadget { poly, provenance } => {
            let inst = io::read_gadget(&read(&poly)?, &read(&provenance)?)
                .with_context(|| format!("{} with {}", poly.display(), provenance.display()))?;
            let fails: Vec<String> = match &inst {
                GadgetInstance::Hard5(i) => verify_hard5(i).iter().map(ToString::to_string).collect(),
                GadgetInstance::Hard4h(i) => verify_hard4h(i).iter().map(ToString::to_string).collect(),
            };
            if fails.is_empty() {
                println!("OK");
                return Ok(0);
            }
            for f in &fails {
                println!("{f}");
            }
            Ok(1)
        }
        Cmd::Render {
            poly,
            coloring,
            edges,
            size,
            o,
        } => {
            let p = io::read_polygon(&read(&poly)?).with_context(|| poly.display().to_string())?;
            let mode = match edges {
                Edges::Visibility => EdgeMode::Visibility,
                Edges::Chords => EdgeMode::Chords,
                Edges::None => EdgeMode::None,
            };
            let selected = if mode == EdgeMode::None {
                Vec::new()
            } else {
                mode.select(&visibility_graph_with_holes(&p))
            };
            let mut spec = RenderSpec::new(p).with_edges(selected);
            spec.size = size;
            if let Some(path) = coloring {
                let c = io::read_coloring(&read(&path)?).with_context(|| path.display().to_string())?;
                spec = spec.with_coloring(c).map_err(anyhow::Error::msg)?;
            }
            emit(Some(&o), &render_svg(&spec))?;
            Ok(0)
        }
        Cmd::RandomPolygon { n, seed, lattice, o } => {
            if n < 3 {
                bail!("a polygon needs at least 3 vertices");
            }
            let p = if lattice {
                random_lattice_polygon(n, seed)?
            } else {
                random_simple_polygon(n, seed)?
            };
            emit(o.as_deref(), &io::write_simple_polygon(&p))?;
            Ok(0)
        }
    }
}

fn four_or_three(g: &VisGraph, k: u8) -> Result<viscolor::coloring::FourColorOutcome> {
    Ok(if k == 3 { three_color_graph(g)? } else { four_color(g)? })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
