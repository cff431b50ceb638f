//! Orientations, digraphs, holes, and 1-perfect / hole-cyclic orientations.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::twosat::{two_sat_solve, Lit, TwoSatInstance};

/// Default vertex bound for exhaustive hole enumeration.
pub const HOLE_BOUND: usize = 16;

/// An orientation of every edge of a host graph. `forward[i]` directs the
/// `i`-th canonical edge from its lower to its higher endpoint.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    host: Graph,
    edges: Vec<EdgeId>,
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(host: Graph, forward: Vec<bool>) -> Result<Self> {
        let edges = host.edge_list();
        if forward.len() != edges.len() {
            return Err(Error::InvalidOrientation(format!(
                "{} directions for {} edges",
                forward.len(),
                edges.len()
            )));
        }
        Ok(Orientation { host, edges, forward })
    }

    /// Every host edge must appear exactly once, in one direction.
    pub fn from_arcs(host: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let edges = host.edge_list();
        let mut forward = vec![None; edges.len()];
        for &(u, v) in arcs {
            let e = EdgeId::new(u, v)
                .map_err(|_| Error::InvalidOrientation(format!("loop at {u}")))?;
            let i = edges
                .binary_search(&e)
                .map_err(|_| Error::InvalidOrientation(format!("{u}->{v} is not a host edge")))?;
            if forward[i].replace(u < v).is_some() {
                return Err(Error::InvalidOrientation(format!("edge {e} oriented twice")));
            }
        }
        if let Some(i) = forward.iter().position(Option::is_none) {
            return Err(Error::InvalidOrientation(format!("edge {} not oriented", edges[i])));
        }
        let forward = forward.into_iter().map(Option::unwrap).collect();
        Ok(Orientation { host, edges, forward })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn directions(&self) -> &[bool] {
        &self.forward
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.forward)
            .map(|(e, &f)| if f { (e.lo(), e.hi()) } else { (e.hi(), e.lo()) })
            .collect()
    }

    /// Whether `u -> v` is an arc.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        match EdgeId::new(u, v).ok().and_then(|e| self.edges.binary_search(&e).ok()) {
            Some(i) => self.forward[i] == (u < v),
            None => false,
        }
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.host.neighbors(v).iter().copied().filter(|&w| self.has_arc(v, w)).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.host.neighbors(v).iter().copied().filter(|&w| self.has_arc(w, v)).collect()
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            host: self.host.clone(),
            edges: self.edges.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::new(self.host.n(), self.arcs()).expect("orientation arcs are valid")
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.arcs().serialize(s)
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation{:?}", self.arcs())
    }
}

/// A loopless digraph; opposite arcs are allowed, duplicates collapse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph { out, inn })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// Every arc reversed; turns out-semi-complete digraphs into in-semi-complete ones.
    pub fn reversed(&self) -> Digraph {
        Digraph { out: self.inn.clone(), inn: self.out.clone() }
    }

    /// Whether every two distinct vertices of `set` are joined by an arc.
    pub fn is_semi_complete_set(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| {
            set[i + 1..].iter().all(|&b| self.has_arc(a, b) || self.has_arc(b, a))
        })
    }
}

pub fn underlying_graph(d: &Digraph) -> Graph {
    Graph::from_edges(d.n(), d.arcs()).expect("digraph arcs are loopless and in range")
}

pub fn is_out_semi_complete(d: &Digraph) -> bool {
    (0..d.n()).all(|v| d.is_semi_complete_set(d.out_neighbors(v)))
}

/// Vertices whose in-neighborhood is semi-complete.
pub fn semi_complete_in_vertices(d: &Digraph) -> Vec<usize> {
    (0..d.n()).filter(|&v| d.is_semi_complete_set(d.in_neighbors(v))).collect()
}

/// Holes (chordless cycles on at least four vertices), each listed once as
/// the rotation starting at its smallest vertex, in the direction whose
/// second vertex is smaller than its last. `max_len` caps the hole length and
/// lifts the vertex bound.
pub fn holes(g: &Graph, max_len: Option<usize>) -> Result<Vec<Vec<usize>>> {
    if max_len.is_none() && g.n() > HOLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "vertices for exhaustive hole enumeration",
            bound: HOLE_BOUND,
            actual: g.n(),
        });
    }
    let cap = max_len.unwrap_or(g.n());
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        on_path[s] = true;
        for &p1 in g.neighbors(s).iter().filter(|&&p| p > s) {
            on_path[p1] = true;
            let mut path = vec![s, p1];
            grow_hole(g, cap, &mut path, &mut on_path, &mut out);
            on_path[p1] = false;
        }
        on_path[s] = false;
    }
    Ok(out)
}

fn grow_hole(
    g: &Graph,
    cap: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let s = path[0];
    let k = path.len();
    let last = path[k - 1];
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        if path[1..k - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if g.has_edge(s, w) {
            if k + 1 >= 4 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            continue;
        }
        if k + 1 < cap {
            path.push(w);
            on_path[w] = true;
            grow_hole(g, cap, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

fn cycle_is_directed(o: &Orientation, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let step = |i: usize| (cycle[i], cycle[(i + 1) % k]);
    (0..k).all(|i| {
        let (a, b) = step(i);
        o.has_arc(a, b)
    }) || (0..k).all(|i| {
        let (a, b) = step(i);
        o.has_arc(b, a)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleCyclicReport {
    pub hole_cyclic: bool,
    pub holes_checked: usize,
    /// False when a length cap may have hidden longer holes.
    pub complete: bool,
    pub violation: Option<Vec<usize>>,
}

/// Checks every hole up to `max_len` vertices (all holes when `None`).
pub fn check_hole_cyclic(o: &Orientation, max_len: Option<usize>) -> Result<HoleCyclicReport> {
    let all = holes(o.host(), max_len)?;
    let violation = all.iter().find(|c| !cycle_is_directed(o, c)).cloned();
    Ok(HoleCyclicReport {
        hole_cyclic: violation.is_none(),
        holes_checked: all.len(),
        complete: max_len.is_none_or(|l| l >= o.host().n()),
        violation,
    })
}

pub fn is_hole_cyclic(o: &Orientation) -> Result<bool> {
    Ok(check_hole_cyclic(o, None)?.hole_cyclic)
}

/// Every out-neighborhood is a clique of the host.
pub fn is_one_perfect(o: &Orientation) -> bool {
    o.host().vertices().all(|v| o.host().is_clique(&o.out_neighbors(v)))
}

/// Literal "`v -> u`" for the host edge `{v, u}` with canonical index `idx`.
fn arc_lit(idx: usize, v: usize, u: usize) -> Lit {
    if v < u {
        Lit::pos(idx)
    } else {
        Lit::neg(idx)
    }
}

/// One variable per edge (true = lower endpoint to higher); for every vertex
/// `v` and non-adjacent `u, w ∈ N(v)`, forbid `v -> u` together with `v -> w`.
pub fn one_perfect_two_sat(g: &Graph) -> TwoSatInstance {
    let edges = g.edge_list();
    let idx = |a: usize, b: usize| edges.binary_search(&EdgeId::new(a, b).unwrap()).unwrap();
    let mut inst = TwoSatInstance::new(edges.len());
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(u, w) {
                    let a = arc_lit(idx(v, u), v, u).negated();
                    let b = arc_lit(idx(v, w), v, w).negated();
                    inst.add_clause(a, b).unwrap();
                }
            }
        }
    }
    inst
}

/// A 1-perfect orientation of `g`, if one exists.
pub fn recognize_one_perfectly_orientable(g: &Graph) -> Option<Orientation> {
    let assignment = two_sat_solve(&one_perfect_two_sat(g))?;
    let o = Orientation::new(g.clone(), assignment).unwrap();
    assert!(is_one_perfect(&o), "2-SAT assignment is not 1-perfect");
    Some(o)
}

/// A hole-cyclic orientation, if one exists. Each hole forces its edges to be
/// all forward or all backward along the cycle, which is a system of parity
/// equations between edge variables; union-find with parities solves it.
/// Cost is dominated by hole enumeration, so the hole bound applies.
pub fn hole_cyclic_orientation(g: &Graph) -> Result<Option<Orientation>> {
    let all = holes(g, None)?;
    let edges = g.edge_list();
    let idx = |a: usize, b: usize| edges.binary_search(&EdgeId::new(a, b).unwrap()).unwrap();
    let mut uf = ParityUnionFind::new(edges.len());
    for cycle in &all {
        let k = cycle.len();
        // Direction variable x_e agrees with "forward along the cycle" iff a < b.
        let term = |i: usize| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (idx(a, b), a < b)
        };
        let (e0, p0) = term(0);
        for i in 1..k {
            let (e, p) = term(i);
            if !uf.union(e0, e, p0 ^ p) {
                return Ok(None);
            }
        }
    }
    let forward = (0..edges.len()).map(|e| uf.find(e).1).collect();
    Ok(Some(Orientation::new(g.clone(), forward)?))
}

/// Union-find recording, for each element, its parity relative to the root.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, pp) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= pp;
        (root, self.parity[x])
    }

    /// Imposes `x ⊕ y = diff`; false on contradiction.
    fn union(&mut self, x: usize, y: usize, diff: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == diff;
        }
        self.parent[ry] = rx;
        self.parity[ry] = px ^ py ^ diff;
        true
    }
}
