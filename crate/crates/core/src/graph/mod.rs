//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! Adjacency is stored twice: as sorted neighbor lists (for iteration) and,
//! for graphs up to [`MATRIX_LIMIT`] vertices, as a packed bit matrix so that
//! `has_edge` is a single word lookup. Larger graphs fall back to a binary
//! search in the shorter of the two neighbor lists.

mod io;
mod metrics;

pub use io::{
    encode_graph6, parse_dimacs, parse_edge_list, parse_graph6, parse_weighted_json,
    parse_weights, WeightedGraphJson,
};
pub use metrics::{connected_components, diameter, distances_from, eccentricity, is_connected};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graphs with at most this many vertices get an adjacency bit matrix.
pub const MATRIX_LIMIT: usize = 4096;

#[derive(Clone)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; words * n],
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// A finite simple undirected graph with a non-empty vertex set.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    matrix: Option<BitMatrix>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// direction) are collapsed; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(n, u)?;
            check_vertex(n, v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(adj))
    }

    /// `adj` must be symmetric, loop-free, sorted and deduplicated.
    pub(crate) fn from_sorted_lists(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(!adj.is_empty());
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= MATRIX_LIMIT).then(|| {
            let mut mat = BitMatrix::new(n);
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    mat.set(u, v);
                }
            }
            mat
        });
        Graph { adj, m, matrix }
    }

    /// Builds a graph on at most 64 vertices from neighbor bitmasks.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let adj = masks
            .iter()
            .map(|&mask| BitIter(mask).collect())
            .collect();
        Self::from_sorted_lists(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        check_vertex(self.n(), v)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.matrix {
            Some(mat) => mat.get(u, v),
            None => {
                let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
                    (u, v)
                } else {
                    (v, u)
                };
                self.adj[a].binary_search(&b).is_ok()
            }
        }
    }

    /// Edges in ascending canonical order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| EdgeId(u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<EdgeId> {
        self.edges().collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&w| self.has_edge(u, w)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&w| !self.has_edge(u, w)))
    }

    /// A vertex adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    /// Neighborhood bitmasks, available for graphs on at most 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| {
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | 1 << w))
                .collect()
        })
    }

    /// The graph with the given extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let edges = self
            .edges()
            .chain(extra)
            .map(|e| (e.lo(), e.hi()))
            .collect::<Vec<_>>();
        Graph::from_edges(self.n(), edges)
    }

    /// The graph with the given edges removed (absent edges are ignored).
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let mut adj = self.adj.clone();
        for e in removed {
            adj[e.lo()].retain(|&w| w != e.hi());
            adj[e.hi()].retain(|&w| w != e.lo());
        }
        Graph::from_sorted_lists(adj)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}

fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct EdgeId(usize, usize);

impl EdgeId {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgeId(a, b)),
            std::cmp::Ordering::Greater => Ok(EdgeId(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if v == self.0 {
            Some(self.1)
        } else if v == self.1 {
            Some(self.0)
        } else {
            None
        }
    }

    /// Verifies that the edge exists in `g`.
    pub fn check_in(self, g: &Graph) -> Result<()> {
        g.check_vertex(self.1)?;
        if g.has_edge(self.0, self.1) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(self))
        }
    }
}

impl TryFrom<(usize, usize)> for EdgeId {
    type Error = Error;

    fn try_from((a, b): (usize, usize)) -> Result<Self> {
        EdgeId::new(a, b)
    }
}

impl From<EdgeId> for (usize, usize) {
    fn from(e: EdgeId) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An induced path of a host graph, as an ordered vertex sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct InducedPath(Vec<usize>);

impl InducedPath {
    /// Validates that `vertices` is a non-empty induced path of `g`:
    /// distinct, consecutive vertices adjacent, all other pairs non-adjacent.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotInducedPath(vertices));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        if is_induced_path(g, &vertices) {
            Ok(InducedPath(vertices))
        } else {
            Err(Error::NotInducedPath(vertices))
        }
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        InducedPath(vertices)
    }

    pub fn single(v: usize) -> Self {
        InducedPath(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of vertices (a `P_k` has `len() == k`).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        InducedPath(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Debug for InducedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn is_induced_path(g: &Graph, vertices: &[usize]) -> bool {
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &w) in vertices.iter().enumerate().skip(i + 1) {
            if u == w {
                return false;
            }
            if g.has_edge(u, w) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// A graph with a nonnegative integer weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                graph.n(),
                weights.len()
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn uniform(graph: Graph, weight: u64) -> Self {
        let weights = vec![weight; graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weight_of(&self, vertices: &[usize]) -> u64 {
        vertices.iter().map(|&v| self.weights[v]).sum()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Induced weighted subgraph; the second component maps new ids to old.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(WeightedGraph, Vec<usize>)> {
        let (graph, remap) = induced_subgraph(&self.graph, subset)?;
        let weights = remap.iter().map(|&v| self.weights[v]).collect();
        Ok((WeightedGraph { graph, weights }, remap))
    }
}

/// The complement: distinct `u`, `v` adjacent iff they are not adjacent in `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| {
            let mut out = Vec::with_capacity(n - 1 - g.degree(u));
            let mut nbrs = g.neighbors(u).iter().peekable();
            for v in 0..n {
                if nbrs.peek() == Some(&&v) {
                    nbrs.next();
                } else if v != u {
                    out.push(v);
                }
            }
            out
        })
        .collect();
    Graph::from_sorted_lists(adj)
}

/// The line graph `L(g)`. Vertex `i` of the result corresponds to
/// `mapping[i]`, the `i`-th edge of `g` in canonical order.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<EdgeId>)> {
    let mapping = g.edge_list();
    if mapping.is_empty() {
        return Err(Error::NoEdges);
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, e) in mapping.iter().enumerate() {
        incident[e.lo()].push(i);
        incident[e.hi()].push(i);
    }
    let mut adj = vec![Vec::new(); mapping.len()];
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Ok((Graph::from_sorted_lists(adj), mapping))
}

/// `g[subset]`. The returned remap sends new vertex ids to the original ids,
/// in ascending order of original id.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut remap = subset.to_vec();
    for &v in &remap {
        g.check_vertex(v)?;
    }
    remap.sort_unstable();
    remap.dedup();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in remap.iter().enumerate() {
        index[v] = i;
    }
    let adj = remap
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect()
        })
        .collect();
    Ok((Graph::from_sorted_lists(adj), remap))
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(0).unwrap_err(), Error::EmptyVertexSet);
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(1, 0) && !g.has_edge(0, 2));
    }

    #[test]
    fn large_graphs_use_list_lookup() {
        let n = MATRIX_LIMIT + 10;
        let g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        assert!(g.has_edge(n - 1, n - 2));
        assert!(!g.has_edge(0, n - 1));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&complete(4)).m(), 0);
        // C5 is self-complementary; its complement is the pentagram 0-2-4-1-3.
        let c5c = complement(&cycle(5));
        let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5c, pentagram);
    }

    #[test]
    fn complement_is_involution_exhaustive() {
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                assert_eq!(complement(&complement(&g)), g);
            }
        }
    }

    #[test]
    fn line_graph_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (l, map) = line_graph(&p3).unwrap();
        assert_eq!((l.n(), l.m()), (2, 1));
        assert_eq!(map, vec![EdgeId(0, 1), EdgeId(1, 2)]);

        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let (prism, _) = line_graph(&k23).unwrap();
        assert_eq!((prism.n(), prism.m()), (6, 9));
        assert!(prism.vertices().all(|v| prism.degree(v) == 3));

        assert_eq!(line_graph(&Graph::new(3).unwrap()).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        let (all, remap) = induced_subgraph(&c5, &[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(all, c5);
        assert_eq!(remap, vec![0, 1, 2, 3, 4]);

        let (p3, remap) = induced_subgraph(&c5, &[1, 2, 3]).unwrap();
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(remap, vec![1, 2, 3]);

        assert_eq!(induced_subgraph(&c5, &[]).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn induced_path_validation() {
        let c5 = cycle(5);
        assert!(InducedPath::new(&c5, vec![0, 1, 2, 3]).is_ok());
        assert!(InducedPath::new(&c5, vec![0, 1, 2, 3, 4]).is_err());
        assert!(InducedPath::new(&c5, vec![0, 2]).is_err());
        assert!(InducedPath::new(&c5, vec![0, 1, 0]).is_err());
        assert!(InducedPath::new(&c5, vec![]).is_err());
    }

    #[test]
    fn edge_id_canonical() {
        assert_eq!(EdgeId::new(5, 2).unwrap().endpoints(), (2, 5));
        assert!(EdgeId::new(3, 3).is_err());
        let json = serde_json::to_string(&EdgeId::new(4, 1).unwrap()).unwrap();
        assert_eq!(json, "[1,4]");
        let back: EdgeId = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back.endpoints(), (1, 4));
    }
}
