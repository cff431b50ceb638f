//! Small named graphs with annotated vertices, edges, paths and orientations.

use std::collections::BTreeMap;

use serde::Serialize;

use super::automorphism::is_edge_transitive;
use crate::error::{Error, Result};
use crate::graph::{line_graph, EdgeId, Graph, InducedPath};
use crate::orient::{is_hole_cyclic, Orientation};

pub const FIXTURE_NAMES: [&str; 7] = [
    "fig1a",
    "fig1b",
    "fig2_G",
    "fig2_LG",
    "fig3_prism",
    "fig4",
    "fig5_circulant",
];

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: String,
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub edges: Vec<EdgeId>,
    pub vertex_labels: BTreeMap<String, usize>,
    pub edge_labels: BTreeMap<String, EdgeId>,
    pub paths: Vec<InducedPath>,
    pub orientation: Option<Orientation>,
}

impl Fixture {
    fn new(name: &str, graph: Graph) -> Self {
        Fixture {
            name: name.to_string(),
            n: graph.n(),
            edges: graph.edge_list(),
            graph,
            vertex_labels: BTreeMap::new(),
            edge_labels: BTreeMap::new(),
            paths: Vec::new(),
            orientation: None,
        }
    }

    fn vertices(mut self, labels: &[(&str, usize)]) -> Self {
        for &(l, v) in labels {
            self.vertex_labels.insert(l.to_string(), v);
        }
        self
    }

    fn path(mut self, vertices: &[usize]) -> Result<Self> {
        let p = InducedPath::new(&self.graph, vertices.to_vec())
            .map_err(|e| mismatch(&self.name, &format!("annotated path: {e}")))?;
        self.paths.push(p);
        Ok(self)
    }

    pub fn vertex(&self, label: &str) -> usize {
        self.vertex_labels[label]
    }

    pub fn edge(&self, label: &str) -> EdgeId {
        self.edge_labels[label]
    }
}

fn mismatch(name: &str, detail: &str) -> Error {
    Error::FixtureMismatch { name: name.to_string(), detail: detail.to_string() }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixture edges are valid")
}

/// Edges of the 5-vertex graph, drawn with vertices 1..5 (0-based here).
const FIG2_EDGES: [(&str, (usize, usize)); 7] = [
    ("a", (0, 1)),
    ("b", (2, 3)),
    ("c", (0, 4)),
    ("d", (1, 4)),
    ("e", (1, 2)),
    ("f", (2, 4)),
    ("g", (3, 4)),
];

const FIG4_ARCS: [(usize, usize); 7] = [(2, 4), (4, 5), (5, 3), (1, 3), (0, 1), (2, 0), (3, 2)];

pub fn load_fixture(name: &str) -> Result<Fixture> {
    match name {
        "fig1a" => {
            // Path 0-1-2-4-5 with a pendant vertex 3 on 2.
            let g = graph(6, &[(0, 1), (1, 2), (2, 4), (4, 5), (2, 3)]);
            Ok(Fixture::new(name, g).vertices(&[("a", 3)]))
        }
        "fig1b" => {
            let g = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
            Ok(Fixture::new(name, g).vertices(&[("x1", 0), ("x2", 1)]))
        }
        "fig2_G" => {
            let edges: Vec<(usize, usize)> = FIG2_EDGES.iter().map(|&(_, e)| e).collect();
            let mut f = Fixture::new(name, graph(5, &edges));
            for v in 0..5 {
                f.vertex_labels.insert((v + 1).to_string(), v);
            }
            for (l, (u, v)) in FIG2_EDGES {
                f.edge_labels.insert(l.to_string(), EdgeId::new(u, v)?);
            }
            Ok(f)
        }
        "fig2_LG" => {
            let base = load_fixture("fig2_G")?;
            let (lg, mapping) = line_graph(&base.graph)?;
            let mut f = Fixture::new(name, lg);
            for (l, e) in &base.edge_labels {
                let idx = mapping.binary_search(e).map_err(|_| mismatch(name, "edge label"))?;
                f.vertex_labels.insert(l.clone(), idx);
            }
            Ok(f)
        }
        "fig3_prism" => {
            let (a, b, c, d, e, f_) = (0, 1, 2, 3, 4, 5);
            let g = graph(
                6,
                &[(a, c), (c, d), (d, f_), (d, b), (b, f_), (f_, e), (e, c), (e, a), (a, b)],
            );
            Fixture::new(name, g)
                .vertices(&[("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f_)])
                .path(&[a, c, d, f_])
        }
        "fig4" => {
            let g = graph(6, &FIG4_ARCS);
            let o = Orientation::from_arcs(g.clone(), &FIG4_ARCS)?;
            if !is_hole_cyclic(&o)? {
                return Err(mismatch(name, "annotated orientation is not hole-cyclic"));
            }
            let mut f = Fixture::new(name, g);
            f.orientation = Some(o);
            Ok(f)
        }
        "fig5_circulant" => {
            let g = circulant(13, &[1, 5]);
            if !is_edge_transitive(&g)? {
                return Err(mismatch(name, "circulant is not edge-transitive"));
            }
            Fixture::new(name, g)
                .vertices(&[("v1", 0), ("v2", 12), ("v3", 4), ("v4", 9), ("v5", 10)])
                .path(&[0, 12, 4, 9, 10])
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Vertex `i` is adjacent to `i ± s (mod n)` for each step `s`.
pub fn circulant(n: usize, steps: &[usize]) -> Graph {
    let edges = (0..n).flat_map(|i| steps.iter().map(move |&s| (i, (i + s) % n)));
    Graph::from_edges(n, edges.filter(|&(a, b)| a != b)).expect("circulant edges are valid")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
}
