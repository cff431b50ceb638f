//! Graphviz export of certificates.

use std::collections::BTreeSet;
use std::fmt::Write;

use avoidable::Graph;

#[derive(Default)]
pub struct Highlight {
    /// Vertices drawn filled.
    pub marked: Vec<usize>,
    /// Closed walk drawn in bold.
    pub cycle: Option<Vec<usize>>,
    /// Path drawn dashed red.
    pub failure: Option<Vec<usize>>,
}

fn walk_edges(walk: &[usize], closed: bool) -> BTreeSet<(usize, usize)> {
    let mut out: BTreeSet<(usize, usize)> =
        walk.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
    if closed && walk.len() > 2 {
        let (a, b) = (walk[0], walk[walk.len() - 1]);
        out.insert((a.min(b), a.max(b)));
    }
    out
}

pub fn render(g: &Graph, h: &Highlight) -> String {
    let bold = h.cycle.as_deref().map(|c| walk_edges(c, true)).unwrap_or_default();
    let dashed = h.failure.as_deref().map(|p| walk_edges(p, false)).unwrap_or_default();
    let mut out = String::from("graph certificate {\n  node [shape=circle];\n");
    for v in g.vertices() {
        if h.marked.contains(&v) {
            writeln!(out, "  {v} [style=filled, fillcolor=lightblue];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for e in g.edges() {
        let key = (e.lo(), e.hi());
        let style = if dashed.contains(&key) {
            " [style=dashed, color=red]"
        } else if bold.contains(&key) {
            " [penwidth=3]"
        } else {
            ""
        };
        writeln!(out, "  {} -- {}{style};", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    out
}
