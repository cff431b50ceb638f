//! Fill-in: elimination games, chordality and minimal triangulations.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::avoid::is_simplicial_vertex;
use crate::error::{Error, Result};
use crate::graph::{connected_components, BitIter, EdgeId, Graph};
use crate::search::{lbfs, VertexOrdering};

/// Default vertex bound for [`enumerate_minimal_triangulations`].
pub const TRIANGULATION_ENUM_BOUND: usize = 7;

/// A set of fill edges added to a base graph.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    #[serde(skip)]
    base: Graph,
    fill: BTreeSet<EdgeId>,
}

impl Triangulation {
    pub fn new(base: Graph, fill: BTreeSet<EdgeId>) -> Result<Self> {
        for &f in &fill {
            base.check_vertex(f.hi())?;
            if base.has_edge(f.lo(), f.hi()) {
                return Err(Error::InvalidArgument(format!(
                    "fill edge {f} is already an edge of the base graph"
                )));
            }
        }
        Ok(Triangulation { base, fill })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fill(&self) -> &BTreeSet<EdgeId> {
        &self.fill
    }

    /// `base ∪ fill`.
    pub fn graph(&self) -> Graph {
        self.base
            .with_edges(self.fill.iter().copied())
            .expect("fill edges were validated against the base")
    }
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Triangulation")
            .field("n", &self.base.n())
            .field("fill", &self.fill)
            .finish()
    }
}

/// Non-adjacent pairs inside `N(v)`.
pub fn deficiency(g: &Graph, v: usize) -> BTreeSet<EdgeId> {
    let nbrs = g.neighbors(v);
    let mut out = BTreeSet::new();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                out.insert(EdgeId::new(a, b).unwrap());
            }
        }
    }
    out
}

/// The filled graph of `sigma`: eliminate vertices in order, each time making
/// the remaining neighborhood of the eliminated vertex a clique.
pub fn elimination_fill(g: &Graph, sigma: &VertexOrdering) -> Result<Triangulation> {
    sigma.check_for(g)?;
    let mut adj: Vec<HashSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut fill = BTreeSet::new();
    for &v in sigma.sequence() {
        let mut nbrs: Vec<usize> = adj[v].iter().copied().collect();
        nbrs.sort_unstable();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if adj[a].insert(b) {
                    adj[b].insert(a);
                    fill.insert(EdgeId::new(a, b).unwrap());
                }
            }
        }
        for &a in &nbrs {
            adj[a].remove(&v);
        }
    }
    Triangulation::new(g.clone(), fill)
}

/// Whether every vertex's later neighbors in `sigma` form a clique, checked by
/// testing that they all neighbor the earliest one.
pub fn is_perfect_elimination_ordering(g: &Graph, sigma: &VertexOrdering) -> bool {
    if sigma.check_for(g).is_err() {
        return false;
    }
    for &v in sigma.sequence() {
        let pv = sigma.position(v);
        let later = || g.neighbors(v).iter().copied().filter(|&w| sigma.position(w) > pv);
        let Some(parent) = later().min_by_key(|&w| sigma.position(w)) else {
            continue;
        };
        if !later().all(|w| w == parent || g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Chordality via reverse LBFS; returns the perfect elimination ordering on success.
pub fn is_chordal(g: &Graph) -> (bool, Option<VertexOrdering>) {
    let peo = lbfs(g, None).expect("lbfs without a start vertex").reversed();
    if is_perfect_elimination_ordering(g, &peo) {
        (true, Some(peo))
    } else {
        (false, None)
    }
}

fn chordal(g: &Graph) -> bool {
    is_chordal(g).0
}

/// Whether no single fill edge can be dropped while keeping the result chordal.
pub fn is_minimal_triangulation(g: &Graph, t: &Triangulation) -> Result<bool> {
    if t.base() != g {
        return Err(Error::InvalidArgument(
            "triangulation is over a different base graph".into(),
        ));
    }
    let h = t.graph();
    if !chordal(&h) {
        return Err(Error::NotChordal);
    }
    Ok(t.fill().iter().all(|&f| !chordal(&h.without_edges(&[f]))))
}

/// Greedily drops fill edges of the chordal supergraph `h` (ascending edge
/// order, repeated until stable) while chordality is preserved.
pub fn minimal_triangulation_below(g: &Graph, h: &Graph) -> Result<Triangulation> {
    if h.n() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "supergraph has {} vertices, base has {}",
            h.n(),
            g.n()
        )));
    }
    if let Some(e) = g.edges().find(|e| !h.has_edge(e.lo(), e.hi())) {
        return Err(Error::NotSupergraph(e));
    }
    if !chordal(h) {
        return Err(Error::NotChordal);
    }
    let mut fill: BTreeSet<EdgeId> = h.edges().filter(|e| !g.has_edge(e.lo(), e.hi())).collect();
    let mut current = h.clone();
    loop {
        let mut changed = false;
        for f in fill.clone() {
            let candidate = current.without_edges(&[f]);
            if chordal(&candidate) {
                current = candidate;
                fill.remove(&f);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Triangulation::new(g.clone(), fill)
}

/// Completes `V ∖ {v}` into a clique, reduces to a minimal triangulation below
/// that, and reports whether `v` stayed simplicial.
pub fn simplicial_in_some_minimal_triangulation(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let completion = g
        .vertices()
        .filter(|&a| a != v)
        .flat_map(|a| (a + 1..g.n()).filter(move |&b| b != v).map(move |b| (a, b)))
        .map(|(a, b)| EdgeId::new(a, b).unwrap());
    let star = g.with_edges(completion)?;
    let t = minimal_triangulation_below(g, &star)?;
    Ok(is_simplicial_vertex(&t.graph(), v))
}

/// Simplicial elimination on neighborhood bitmasks.
pub(crate) fn is_chordal_masks(masks: &[u64]) -> bool {
    let n = masks.len();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    'outer: while alive != 0 {
        for v in BitIter(alive) {
            let nb = masks[v] & alive;
            if BitIter(nb).all(|u| nb & !(masks[u] | 1 << u) == 0) {
                alive &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn enumerate_minimal_triangulations(g: &Graph) -> Result<Vec<Triangulation>> {
    enumerate_minimal_triangulations_bounded(g, TRIANGULATION_ENUM_BOUND)
}

/// Every inclusion-minimal chordal fill. Fill candidates are non-edges inside
/// a component; subsets are scanned by increasing size and supersets of fills
/// already found are skipped, so every chordal subset reached is minimal.
pub fn enumerate_minimal_triangulations_bounded(
    g: &Graph,
    bound: usize,
) -> Result<Vec<Triangulation>> {
    if g.n() > bound.min(64) {
        return Err(Error::BoundExceeded {
            what: "vertices for minimal triangulation enumeration",
            bound: bound.min(64),
            actual: g.n(),
        });
    }
    let mut comp = vec![0; g.n()];
    for (i, c) in connected_components(g).iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    let candidates: Vec<EdgeId> = g
        .vertices()
        .flat_map(|a| (a + 1..g.n()).map(move |b| (a, b)))
        .filter(|&(a, b)| comp[a] == comp[b] && !g.has_edge(a, b))
        .map(|(a, b)| EdgeId::new(a, b).unwrap())
        .collect();
    let k = candidates.len();
    if k > 30 {
        return Err(Error::BoundExceeded {
            what: "candidate fill edges",
            bound: 30,
            actual: k,
        });
    }
    let base = g.masks().unwrap();
    let mut found: Vec<u32> = Vec::new();
    let mut masks = base.clone();
    for size in 0..=k {
        let mut subset: u32 = if size == 0 { 0 } else { (1u32 << size) - 1 };
        loop {
            if !found.iter().any(|&f| f & !subset == 0) {
                masks.copy_from_slice(&base);
                for i in BitIter(subset as u64) {
                    let (a, b) = candidates[i].endpoints();
                    masks[a] |= 1 << b;
                    masks[b] |= 1 << a;
                }
                if is_chordal_masks(&masks) {
                    found.push(subset);
                }
            }
            if size == 0 || size == k {
                break;
            }
            // Gosper's hack: next subset of the same size.
            let c = subset & subset.wrapping_neg();
            let r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
            if subset >> k != 0 {
                break;
            }
        }
    }
    found
        .into_iter()
        .map(|f| {
            let fill = BitIter(f as u64).map(|i| candidates[i]).collect();
            Triangulation::new(g.clone(), fill)
        })
        .collect()
}
