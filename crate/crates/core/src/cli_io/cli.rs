//! The `planar-canon` command line.
//!
//! Exit codes: 0 success (or isomorphic), 1 not isomorphic or a failed
//! selftest, 2 usage, parse or I/O errors, 3 non-planar input, 4 internal errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use super::format::parse_edge_list;
use super::generate::{random_planar, Profile};
use super::selftest::selftest;
use super::write_edge_list;
use crate::canonizer::{canon_planar_with, CanonError, CanonOptions, CanonReport};
use crate::decompose::{biconnected_decompose, BiconTree, BlockShape, ComponentKind, EdgeKind};
use crate::graph_model::{Graph, Vertex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFFERENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NON_PLANAR: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "planar-canon",
    version,
    about = "Canonical forms and isomorphism tests for planar graphs"
)]
struct Args {
    /// Print only what the command is for (canon, generated graph) and errors.
    #[arg(long, global = true)]
    quiet: bool,
    /// Log root candidates and orientation counters as key=value lines on stderr.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canon of an edge-list file.
    Canon { file: PathBuf },
    /// Decide whether two edge-list files describe isomorphic graphs.
    Iso { first: PathBuf, second: PathBuf },
    /// Dump the block tree and the triconnected component trees.
    Decompose {
        file: PathBuf,
        /// Emit a Graphviz description instead of text.
        #[arg(long)]
        dot: bool,
    },
    /// Compare canons with brute-force isomorphism on all small connected planar graphs.
    Selftest {
        /// Largest number of vertices.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Random relabelings per isomorphism class.
        #[arg(long, default_value_t = 2)]
        relabelings: usize,
    },
    /// Print a random planar graph as an edge-list file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "biconnected")]
        profile: Profile,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<CanonError> for Failure {
    fn from(e: CanonError) -> Self {
        let code = match e {
            CanonError::NonPlanar => EXIT_NON_PLANAR,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn canon_of(g: &Graph, trace: bool) -> Result<CanonReport, Failure> {
    Ok(canon_planar_with(
        g,
        &CanonOptions {
            trace,
            ..CanonOptions::default()
        },
    )?)
}

/// Runs the command line `args` (program name first), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    if args.quiet {
        log::set_max_level(log::LevelFilter::Off);
    }
    match execute(&args, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &args.command {
        Command::Canon { file } => {
            let report = canon_of(&load(file)?, args.trace)?;
            for line in &report.trace {
                writeln!(err, "{line}")?;
            }
            write!(out, "{}", report.canon.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let g = load(first)?;
            let h = load(second)?;
            let r1 = canon_of(&g, args.trace)?;
            let r2 = canon_of(&h, args.trace)?;
            for (i, r) in [&r1, &r2].into_iter().enumerate() {
                for line in &r.trace {
                    writeln!(err, "graph={} {line}", i + 1)?;
                }
            }
            let same = r1.canon == r2.canon;
            if !args.quiet {
                writeln!(
                    out,
                    "{}",
                    if same { "ISOMORPHIC" } else { "NOT-ISOMORPHIC" }
                )?;
            }
            Ok(if same { EXIT_OK } else { EXIT_DIFFERENT })
        }
        Command::Decompose { file, dot } => {
            let g = load(file)?;
            let text = if *dot {
                decomposition_dot(&g)?
            } else {
                decomposition_text(&g)?
            };
            write!(out, "{text}")?;
            Ok(EXIT_OK)
        }
        Command::Selftest { n, relabelings } => {
            let report = selftest(*n, *relabelings, 0);
            for m in &report.mismatches {
                writeln!(err, "mismatch: {m}")?;
            }
            if !args.quiet {
                for (k, c) in report.classes.iter().enumerate().skip(1) {
                    writeln!(out, "n={k} classes={c}")?;
                }
                writeln!(
                    out,
                    "graphs={} mismatches={} result={}",
                    report.graphs,
                    report.mismatches.len(),
                    if report.passed() { "PASS" } else { "FAIL" }
                )?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_DIFFERENT
            })
        }
        Command::Gen { n, seed, profile } => {
            if *n == 0 {
                return Err(Failure::input("--n must be at least 1"));
            }
            write!(
                out,
                "{}",
                write_edge_list(&random_planar(*n, *seed, *profile))
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn kind_name(kind: ComponentKind) -> &'static str {
    match kind {
        ComponentKind::Edge => "edge",
        ComponentKind::ThreeBond => "3-bond",
        ComponentKind::Cycle => "cycle",
        ComponentKind::ThreeConnected => "3-connected",
    }
}

fn join(vs: impl IntoIterator<Item = String>) -> String {
    vs.into_iter().collect::<Vec<_>>().join(",")
}

/// A connected component's vertices and its block tree (`None` when isolated).
type Decomposition = (Vec<Vertex>, Option<BiconTree>);

/// Block trees of every connected component, with vertices renamed to the
/// input's ids.
fn decompositions(g: &Graph) -> Result<Vec<Decomposition>, Failure> {
    g.components()
        .into_iter()
        .map(|comp| {
            if comp.len() == 1 {
                return Ok((comp, None));
            }
            let tree = biconnected_decompose(&g.induced(&comp)).map_err(CanonError::from)?;
            Ok((comp, Some(tree)))
        })
        .collect()
}

fn decomposition_text(g: &Graph) -> Result<String, Failure> {
    let mut s = String::new();
    let mut block_id = 0;
    for (comp, tree) in decompositions(g)? {
        let Some(tree) = tree else {
            writeln!(s, "isolated={}", comp[0]).unwrap();
            continue;
        };
        let first = block_id;
        for (a, &v) in tree.articulation_points().iter().enumerate() {
            let blocks = join(tree.blocks_at(a).iter().map(|b| (first + b).to_string()));
            writeln!(s, "articulation={} blocks={blocks}", comp[v]).unwrap();
        }
        for block in tree.blocks() {
            let b = block_id;
            block_id += 1;
            let name = |v: Vertex| comp[block.vertices[v]];
            let vertices = join(block.vertices.iter().map(|&v| comp[v].to_string()));
            let BlockShape::Tricon(t) = &block.shape else {
                writeln!(s, "block={b} shape=bridge vertices={vertices}").unwrap();
                continue;
            };
            writeln!(s, "block={b} shape=tricon vertices={vertices}").unwrap();
            for (p, pair) in t.pairs().iter().enumerate() {
                let (x, y) = pair.endpoints();
                let comps = join(t.components_at(p).iter().map(|c| c.to_string()));
                writeln!(
                    s,
                    "block={b} pair={p} endpoints={},{} components={comps}",
                    name(x),
                    name(y)
                )
                .unwrap();
            }
            for (c, comp_) in t.components().iter().enumerate() {
                let vs = join(comp_.vertices.iter().map(|&v| name(v).to_string()));
                let edges = |real: bool| {
                    join(
                        comp_
                            .edges
                            .iter()
                            .filter(|e| (e.kind == EdgeKind::Real) == real)
                            .map(|e| format!("{}-{}", name(e.u), name(e.v))),
                    )
                };
                writeln!(
                    s,
                    "block={b} component={c} kind={} vertices={vs} real={} virtual={}",
                    kind_name(comp_.kind),
                    edges(true),
                    edges(false)
                )
                .unwrap();
            }
        }
    }
    Ok(s)
}

fn decomposition_dot(g: &Graph) -> Result<String, Failure> {
    let mut s = String::from("graph decomposition {\n  node [fontname=\"monospace\"];\n");
    let mut block_id = 0;
    for (comp, tree) in decompositions(g)? {
        let Some(tree) = tree else {
            writeln!(s, "  v{} [label=\"{}\", shape=circle];", comp[0], comp[0]).unwrap();
            continue;
        };
        let first = block_id;
        for (a, &v) in tree.articulation_points().iter().enumerate() {
            writeln!(s, "  a{} [label=\"{}\", shape=circle];", comp[v], comp[v]).unwrap();
            for b in tree.blocks_at(a) {
                writeln!(s, "  a{} -- b{};", comp[v], first + b).unwrap();
            }
        }
        for block in tree.blocks() {
            let b = block_id;
            block_id += 1;
            let name = |v: Vertex| comp[block.vertices[v]];
            let vertices = join(block.vertices.iter().map(|&v| comp[v].to_string()));
            writeln!(
                s,
                "  b{b} [label=\"block {b}\\n{{{vertices}}}\", shape=box];"
            )
            .unwrap();
            let BlockShape::Tricon(t) = &block.shape else {
                continue;
            };
            writeln!(s, "  subgraph cluster_b{b} {{\n    label=\"block {b}\";").unwrap();
            for (p, pair) in t.pairs().iter().enumerate() {
                let (x, y) = pair.endpoints();
                writeln!(
                    s,
                    "    b{b}p{p} [label=\"{{{},{}}}\", shape=ellipse];",
                    name(x),
                    name(y)
                )
                .unwrap();
                for c in t.components_at(p) {
                    writeln!(s, "    b{b}p{p} -- b{b}c{c};").unwrap();
                }
            }
            for (c, comp_) in t.components().iter().enumerate() {
                let vs = join(comp_.vertices.iter().map(|&v| name(v).to_string()));
                writeln!(
                    s,
                    "    b{b}c{c} [label=\"{}\\n{{{vs}}}\", shape=box];",
                    kind_name(comp_.kind)
                )
                .unwrap();
            }
            writeln!(s, "  }}\n  b{b} -- b{b}c0 [style=dashed];").unwrap();
        }
    }
    s.push_str("}\n");
    Ok(s)
}
