//! `avoidable`: command-line access to avoidability checks, graph searches,
//! triangulations, orientations, the clique solver and the verification lab.
//!
//! Every command prints one JSON document:
//! `{"schema": 1, "command": …, "status": "ok" | "error", "payload" | "error": …, "diagnostics": […]}`.
//! Exit codes: 0 ok, 1 domain or I/O error, 2 usage error, 3 size bound exceeded.

mod commands;
mod dot;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use error::CliError;
use input::GraphArgs;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "avoidable", version, about = "Avoidable vertices, edges and paths, and the algorithms around them")]
struct Cli {
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Avoidability of vertices, edges and induced paths
    Avoidable(AvoidableArgs),
    /// Maximum weight clique along a bisimplicial elimination ordering
    Clique(CliqueArgs),
    /// Elimination fill, minimal triangulations and chordality
    Triangulate(TriangulateArgs),
    /// 1-perfect and hole-cyclic orientations
    Orient(OrientArgs),
    /// LBFS and MCS orderings and their end vertices
    Search(SearchArgs),
    /// Check the avoidable induced path conjecture on graphs or streams
    Conjecture {
        #[command(subcommand)]
        command: ConjectureCommand,
    },
    /// Path-closing corollaries for vertex- and edge-transitive graphs
    Transitivity {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Show or verify the built-in figure fixtures
    Fixture(FixtureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    Vertices,
    Edges,
    PseudoEdges,
    Vertex,
    Edge,
    Path,
    Paths,
}

#[derive(Args, Debug)]
struct AvoidableArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value = "vertices")]
    object: Object,
    /// Vertex ids of the vertex, edge or path to certify
    #[arg(long, value_delimiter = ',')]
    ids: Vec<usize>,
    /// Path length (vertices) for `--object paths`
    #[arg(long)]
    k: Option<usize>,
    /// Also write a Graphviz rendering of the certificate
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CliqueArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Weight sidecar with one `v w` line per vertex; defaults to JSON weights or 1
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Use this ordering instead of computing one
    #[arg(long)]
    ordering: Option<PathBuf>,
    /// Cross-check the weight against exhaustive search
    #[arg(long)]
    oracle: bool,
    /// Solve by exhaustive search only
    #[arg(long, conflicts_with_all = ["oracle", "ordering"])]
    brute: bool,
    /// Include the per-vertex candidates
    #[arg(long)]
    steps: bool,
}

#[derive(Args, Debug)]
struct TriangulateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Elimination ordering: auto, lbfs, mcs, identity, or a file of vertex ids
    #[arg(long, default_value = "auto")]
    ordering: String,
    /// Reduce the fill to a minimal triangulation
    #[arg(long)]
    minimal: bool,
    /// Report whether the fill is inclusion-minimal
    #[arg(long)]
    check_minimal: bool,
    /// List every minimal triangulation (small graphs only)
    #[arg(long, conflicts_with_all = ["minimal", "check_minimal"])]
    enumerate: bool,
}

#[derive(Args, Debug)]
#[group(id = "mode", required = true, multiple = false, args = ["recognize_1po", "hole_cyclic", "verify"])]
struct OrientArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Find a 1-perfect orientation or report that none exists
    #[arg(long = "recognize-1po")]
    recognize_1po: bool,
    /// Find an orientation with every hole directed, or report that none exists
    #[arg(long)]
    hole_cyclic: bool,
    /// Check the orientation in this file (`u v` arc lines or JSON pairs)
    #[arg(long)]
    verify: Option<PathBuf>,
    /// Only check holes up to this length when verifying
    #[arg(long)]
    max_hole_len: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Lbfs,
    Mcs,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value = "lbfs")]
    algorithm: Algorithm,
    #[arg(long)]
    start: Option<usize>,
    /// Every possible end vertex over all tie-breaks (small graphs only)
    #[arg(long)]
    ends: bool,
    /// An avoidable pair at distance equal to the diameter
    #[arg(long)]
    diametral: bool,
}

#[derive(Subcommand, Debug)]
enum ConjectureCommand {
    /// Scan all labeled graphs up to --n vertices, or a graph6 stream
    Scan {
        /// Path lengths, e.g. `3`, `1..3` or `1,2,4`
        #[arg(long, default_value = "1..3")]
        k: String,
        #[arg(long, conflicts_with = "stream")]
        n: Option<usize>,
        /// graph6 file, one graph per line (`-` for stdin)
        #[arg(long)]
        stream: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Allow the 2,097,152 labeled graphs on 7 vertices
        #[arg(long)]
        allow_n7: bool,
    },
    /// Check one graph
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// Scan seeded random graphs
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "1..3")]
        k: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args, Debug)]
struct FixtureArgs {
    /// Fixture name; omit with --list
    #[arg(required_unless_present = "list")]
    name: Option<String>,
    /// Re-check every claim attached to the fixture
    #[arg(long)]
    verify: bool,
    #[arg(long, conflicts_with = "name")]
    list: bool,
}

pub struct Outcome {
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Avoidable(_) => "avoidable",
            Command::Clique(_) => "clique",
            Command::Triangulate(_) => "triangulate",
            Command::Orient(_) => "orient",
            Command::Search(_) => "search",
            Command::Conjecture { .. } => "conjecture",
            Command::Transitivity { .. } => "transitivity",
            Command::Fixture(_) => "fixture",
        }
    }
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Avoidable(a) => commands::avoidable(a),
        Command::Clique(a) => commands::clique(a),
        Command::Triangulate(a) => commands::triangulate(a),
        Command::Orient(a) => commands::orient(a),
        Command::Search(a) => commands::search(a),
        Command::Conjecture { command } => commands::conjecture(command),
        Command::Transitivity { graph } => commands::transitivity(graph),
        Command::Fixture(a) => commands::fixture(a),
    }
}

fn emit(doc: &Value, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(doc).expect("JSON values serialize") + "\n";
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command.name();
    let (doc, code) = match dispatch(&cli.command) {
        Ok(o) => (
            json!({
                "schema": SCHEMA_VERSION,
                "command": command,
                "status": "ok",
                "payload": o.payload,
                "diagnostics": o.diagnostics,
            }),
            0,
        ),
        Err(e) => {
            eprintln!("error: {}", e.message);
            let mut doc = json!({
                "schema": SCHEMA_VERSION,
                "command": command,
                "status": "error",
                "error": { "kind": e.kind, "message": e.message },
                "diagnostics": [],
            });
            if let Some(p) = &e.payload {
                doc["payload"] = p.clone();
            }
            (doc, e.exit_code())
        }
    };
    if let Err(e) = emit(&doc, cli.out.as_ref()) {
        eprintln!("error: {}", e.message);
        return ExitCode::from(e.exit_code());
    }
    ExitCode::from(code)
}
