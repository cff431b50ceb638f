//! Graph, weight, ordering and orientation inputs.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use avoidable::graph::{parse_dimacs, parse_edge_list, parse_graph6, parse_weighted_json, parse_weights};
use avoidable::lab::load_fixture;
use avoidable::orient::Orientation;
use avoidable::search::VertexOrdering;
use avoidable::Graph;
use clap::{Args, ValueEnum};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Dimacs,
    Edgelist,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::Edgelist => "edgelist",
            Format::Json => "json",
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Graph file (`-` for stdin); format from the extension or --format
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Graph given inline as a graph6 string
    #[arg(long)]
    pub g6: Option<String>,
    /// One of the built-in figure fixtures
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: Source,
    /// Input format; overrides detection
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

pub struct Loaded {
    pub graph: Graph,
    pub weights: Option<Vec<u64>>,
    pub description: String,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
    }
}

fn detect(path: &Path, text: &str) -> Format {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("").to_ascii_lowercase();
    match ext.as_str() {
        "g6" | "graph6" => return Format::Graph6,
        "dimacs" | "col" | "clq" => return Format::Dimacs,
        "json" => return Format::Json,
        "txt" | "edges" | "el" | "edgelist" => return Format::Edgelist,
        _ => {}
    }
    let body = text.trim_start();
    if body.starts_with('{') {
        Format::Json
    } else if body.starts_with("p ") || body.starts_with("c ") || body.starts_with("e ") {
        Format::Dimacs
    } else if body.starts_with(">>graph6<<") || body.lines().next().is_some_and(|l| l.split_whitespace().count() == 1 && l.parse::<usize>().is_err()) {
        Format::Graph6
    } else {
        Format::Edgelist
    }
}

pub fn load_graph(args: &GraphArgs) -> Result<Loaded, CliError> {
    let src = &args.source;
    if let Some(name) = &src.fixture {
        let f = load_fixture(name)?;
        return Ok(Loaded {
            graph: f.graph,
            weights: None,
            description: format!("fixture {name}"),
        });
    }
    if let Some(code) = &src.g6 {
        return Ok(Loaded {
            graph: parse_graph6(code)?,
            weights: None,
            description: "inline graph6".into(),
        });
    }
    let path = src.input.as_ref().expect("clap enforces one source");
    let text = read_text(path)?;
    let format = args.format.unwrap_or_else(|| detect(path, &text));
    let (graph, weights) = match format {
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            (parse_graph6(line)?, None)
        }
        Format::Dimacs => (parse_dimacs(&text)?, None),
        Format::Edgelist => (parse_edge_list(&text)?, None),
        Format::Json => parse_weighted_json(&text)?,
    };
    Ok(Loaded {
        graph,
        weights,
        description: format!("{} ({})", path.display(), format.name()),
    })
}

pub fn load_weights(path: &Path, n: usize) -> Result<Vec<u64>, CliError> {
    Ok(parse_weights(&read_text(path)?, n)?)
}

/// Whitespace- or comma-separated integers, or a JSON array of them.
/// Lines starting with `#` are comments.
fn integers(text: &str, what: &str) -> Result<Vec<usize>, CliError> {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || matches!(c, ',' | '[' | ']')))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::domain(format!("{what}: {t:?} is not a vertex id"))))
        .collect()
}

pub fn load_ordering(path: &Path) -> Result<VertexOrdering, CliError> {
    Ok(VertexOrdering::new(integers(&read_text(path)?, "ordering")?)?)
}

/// Arcs as `u v` lines or a JSON list of pairs.
pub fn load_orientation(path: &Path, g: &Graph) -> Result<Orientation, CliError> {
    let ids = integers(&read_text(path)?, "orientation")?;
    if ids.len() % 2 != 0 {
        return Err(CliError::domain("orientation: odd number of endpoints"));
    }
    let arcs: Vec<(usize, usize)> = ids.chunks(2).map(|c| (c[0], c[1])).collect();
    Ok(Orientation::from_arcs(g.clone(), &arcs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect(Path::new("a.g6"), ""), Format::Graph6);
        assert_eq!(detect(Path::new("a"), "p edge 3 1\ne 1 2\n"), Format::Dimacs);
        assert_eq!(detect(Path::new("a"), "{\"n\": 1}"), Format::Json);
        assert_eq!(detect(Path::new("a"), "3\n0 1\n"), Format::Edgelist);
        assert_eq!(detect(Path::new("a"), "Bw\n"), Format::Graph6);
    }

    #[test]
    fn integer_lists() {
        assert_eq!(integers("[1, 2,3]\n# note\n4", "x").unwrap(), vec![1, 2, 3, 4]);
        assert!(integers("1 x", "x").is_err());
    }
}
