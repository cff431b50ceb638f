//! The induced-path conjecture checker and a parallel graph6 stream scanner.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::avoid::{induced_paths, is_avoidable_path};
use crate::graph::{encode_graph6, parse_graph6, Graph, InducedPath};

/// `None` when `g` has no induced `P_k` or has an avoidable one; otherwise
/// every induced `P_k` of `g`, none of them avoidable.
pub fn check_conjecture(g: &Graph, k: usize) -> Option<Vec<InducedPath>> {
    if k == 0 {
        return None;
    }
    let paths = induced_paths(g, k);
    if paths.is_empty() {
        return None;
    }
    let any_avoidable = paths
        .iter()
        .any(|p| is_avoidable_path(g, p).expect("enumerated paths are induced").0);
    (!any_avoidable).then_some(paths)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanFailure {
    pub line: usize,
    pub graph6: String,
    pub k: usize,
    pub paths: Vec<InducedPath>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub graphs_scanned: usize,
    pub k_values: Vec<usize>,
    pub failures: Vec<ScanFailure>,
    pub parse_errors: Vec<ParseFailure>,
    /// Wall time; left out of the serialized report so that reports are
    /// byte-identical across runs and worker counts.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

enum LineOutcome {
    Blank,
    Parsed(Vec<ScanFailure>),
    Error(ParseFailure),
}

fn scan_line(line_no: usize, text: &str, ks: &[usize]) -> LineOutcome {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.starts_with(">>graph6<<") && trimmed.len() == 10 {
        return LineOutcome::Blank;
    }
    match parse_graph6(trimmed) {
        Ok(g) => LineOutcome::Parsed(
            ks.iter()
                .filter_map(|&k| {
                    check_conjecture(&g, k).map(|paths| ScanFailure {
                        line: line_no,
                        graph6: trimmed.to_string(),
                        k,
                        paths,
                    })
                })
                .collect(),
        ),
        Err(e) => LineOutcome::Error(ParseFailure { line: line_no, message: e.to_string() }),
    }
}

/// Checks every graph6 line for every `k` in `ks` on `jobs` worker threads.
/// Lines are numbered from 1; results merge in input order.
pub fn scan<I, S>(lines: I, ks: &[usize], jobs: usize) -> ScanReport
where
    I: IntoIterator<Item = S>,
    S: AsRef<str> + Send + Sync,
{
    let start = Instant::now();
    let lines: Vec<S> = lines.into_iter().collect();
    let work = |(i, line): (usize, &S)| scan_line(i + 1, line.as_ref(), ks);
    let outcomes: Vec<LineOutcome> = if jobs <= 1 {
        lines.iter().enumerate().map(work).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(|| lines.par_iter().enumerate().map(work).collect())
    };
    let mut report = ScanReport {
        graphs_scanned: 0,
        k_values: ks.to_vec(),
        failures: Vec::new(),
        parse_errors: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for outcome in outcomes {
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Parsed(f) => {
                report.graphs_scanned += 1;
                report.failures.extend(f);
            }
            LineOutcome::Error(e) => report.parse_errors.push(e),
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// graph6 lines for a sequence of graphs, for feeding [`scan`].
pub fn graph6_lines<I: IntoIterator<Item = Graph>>(graphs: I) -> Vec<String> {
    graphs.into_iter().map(|g| encode_graph6(&g)).collect()
}
