//! Avoidability of vertices, edges and induced paths.
//!
//! An extension `x·P·y` of an induced path `P` closes to an induced cycle
//! exactly when `x` and `y` are connected after deleting every closed
//! neighborhood of a vertex of `P` (keeping `x` and `y` themselves). All
//! verdicts here reduce to that test; [`close_extension`] additionally
//! returns the cycle built from a shortest `x`–`y` path in the residual graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_induced_path, line_graph, EdgeId, Graph, InducedPath};

const NIL: usize = usize::MAX;

pub fn is_simplicial_vertex(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

fn check_path(g: &Graph, p: &InducedPath) -> Result<()> {
    for &v in p.vertices() {
        g.check_vertex(v)?;
    }
    if p.is_empty() || !is_induced_path(g, p.vertices()) {
        return Err(Error::NotInducedPath(p.vertices().to_vec()));
    }
    Ok(())
}

/// Candidate end vertices `(X, Y)` for extensions of `path`: `X` holds the
/// vertices adjacent to the first vertex and to no other path vertex, `Y`
/// likewise for the last vertex. For a one-vertex path both are `N(v)`.
fn extension_ends(g: &Graph, path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = path.len();
    let (first, last) = (path[0], path[k - 1]);
    if k == 1 {
        return (g.neighbors(first).to_vec(), g.neighbors(first).to_vec());
    }
    let touches = |w: usize, skip: usize| {
        path.iter()
            .enumerate()
            .any(|(i, &p)| i != skip && (p == w || g.has_edge(p, w)))
    };
    let xs = g
        .neighbors(first)
        .iter()
        .copied()
        .filter(|&x| !touches(x, 0))
        .collect();
    let ys = g
        .neighbors(last)
        .iter()
        .copied()
        .filter(|&y| !touches(y, k - 1))
        .collect();
    (xs, ys)
}

/// Extension end pairs `(x, y)` in lexicographic order of the extended path.
fn extension_pairs(g: &Graph, path: &[usize]) -> Vec<(usize, usize)> {
    let (xs, ys) = extension_ends(g, path);
    let single = path.len() == 1;
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            if x != y && !(single && y < x) && !g.has_edge(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

fn extend(path: &[usize], x: usize, y: usize) -> InducedPath {
    let mut v = Vec::with_capacity(path.len() + 2);
    v.push(x);
    v.extend_from_slice(path);
    v.push(y);
    InducedPath::new_unchecked(v)
}

/// All extensions of `p`, lexicographically ordered. Empty iff `p` is simplicial.
/// A one-vertex path `v` yields each induced `P_3` with midpoint `v` once.
pub fn extensions(g: &Graph, p: &InducedPath) -> Result<Vec<InducedPath>> {
    check_path(g, p)?;
    Ok(extension_pairs(g, p.vertices())
        .into_iter()
        .map(|(x, y)| extend(p.vertices(), x, y))
        .collect())
}

pub fn is_simplicial_path(g: &Graph, p: &InducedPath) -> Result<bool> {
    check_path(g, p)?;
    Ok(extension_pairs(g, p.vertices()).is_empty())
}

/// Marks `⋃ N[w]` over `interior`, then unmarks `keep`.
fn blocked_set(g: &Graph, interior: &[usize], keep: &[usize]) -> Vec<bool> {
    let mut blocked = vec![false; g.n()];
    for &w in interior {
        blocked[w] = true;
        for &z in g.neighbors(w) {
            blocked[z] = true;
        }
    }
    for &k in keep {
        blocked[k] = false;
    }
    blocked
}

/// Closes the induced path `p` (at least three vertices) to an induced cycle,
/// returned as `p` followed by the remaining cycle vertices; `None` if no
/// induced cycle contains `p`.
pub fn close_extension(g: &Graph, p: &InducedPath) -> Result<Option<Vec<usize>>> {
    check_path(g, p)?;
    if p.len() < 3 {
        return Err(Error::PathTooShort {
            required: 3,
            actual: p.len(),
        });
    }
    let path = p.vertices();
    let (x, y) = (p.first(), p.last());
    let blocked = blocked_set(g, &path[1..path.len() - 1], &[x, y]);

    let mut parent = vec![NIL; g.n()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    'bfs: while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !blocked[w] && parent[w] == NIL {
                parent[w] = u;
                if w == y {
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
    }
    if parent[y] == NIL {
        return Ok(None);
    }
    let mut cycle = path.to_vec();
    let mut u = parent[y];
    while u != x {
        cycle.push(u);
        u = parent[u];
    }
    Ok(Some(cycle))
}

/// Component labels of the graph with `blocked` vertices removed.
fn residual_components(g: &Graph, blocked: &[bool]) -> Vec<usize> {
    let mut label = vec![NIL; g.n()];
    let mut stack = Vec::new();
    let mut next = 0;
    for s in g.vertices() {
        if blocked[s] || label[s] != NIL {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !blocked[w] && label[w] == NIL {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Sorted, deduplicated residual components adjacent to `v`.
fn touched(g: &Graph, label: &[usize], v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&w| label[w])
        .filter(|&l| l != NIL)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn share_any(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// First extension (lexicographically) that closes to no induced cycle.
/// Every extension of `path` shares the same deleted set `⋃_{w∈P} N[w]`, so
/// one component labelling answers all of them.
fn first_failing_extension(g: &Graph, path: &[usize]) -> Option<(usize, usize)> {
    let pairs = extension_pairs(g, path);
    if pairs.is_empty() {
        return None;
    }
    let label = residual_components(g, &blocked_set(g, path, &[]));
    let mut cache: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    let mut comps = |v: usize| -> Vec<usize> {
        cache[v].get_or_insert_with(|| touched(g, &label, v)).clone()
    };
    pairs.into_iter().find(|&(x, y)| {
        let (cx, cy) = (comps(x), comps(y));
        !share_any(&cx, &cy)
    })
}

/// Evidence for an avoidability verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosabilityCertificate {
    pub path: InducedPath,
    pub extensions_checked: usize,
    /// The lexicographically first extension, when the path is avoidable and
    /// not simplicial; `cycle` is an induced cycle containing it.
    pub extension: Option<InducedPath>,
    pub cycle: Option<Vec<usize>>,
    /// The lexicographically first extension that closes to no induced cycle.
    pub failure_witness: Option<InducedPath>,
}

/// Whether every extension of `p` lies on an induced cycle.
pub fn is_avoidable_path(g: &Graph, p: &InducedPath) -> Result<(bool, ClosabilityCertificate)> {
    check_path(g, p)?;
    let path = p.vertices();
    let pairs = extension_pairs(g, path);
    let mut cert = ClosabilityCertificate {
        path: p.clone(),
        extensions_checked: pairs.len(),
        extension: None,
        cycle: None,
        failure_witness: None,
    };
    if let Some((x, y)) = first_failing_extension(g, path) {
        cert.extensions_checked = pairs.iter().position(|&e| e == (x, y)).unwrap() + 1;
        cert.failure_witness = Some(extend(path, x, y));
        return Ok((false, cert));
    }
    if let Some(&(x, y)) = pairs.first() {
        let ext = extend(path, x, y);
        cert.cycle = close_extension(g, &ext)?;
        debug_assert!(cert.cycle.is_some());
        cert.extension = Some(ext);
    }
    Ok((true, cert))
}

/// Every induced `P_3` with midpoint `v` closes to an induced cycle: any two
/// non-adjacent neighbors of `v` meet a common component of `G - N[v]`.
pub fn is_avoidable_vertex(g: &Graph, v: usize) -> bool {
    let nbrs = g.neighbors(v);
    if nbrs.len() <= 1 {
        return true;
    }
    let label = residual_components(g, &blocked_set(g, &[v], &[]));
    let comps: Vec<Vec<usize>> = nbrs.iter().map(|&x| touched(g, &label, x)).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for (j, &y) in nbrs.iter().enumerate().skip(i + 1) {
            if !g.has_edge(x, y) && !share_any(&comps[i], &comps[j]) {
                return false;
            }
        }
    }
    true
}

pub fn avoidable_vertices(g: &Graph) -> Vec<usize> {
    g.vertices().filter(|&v| is_avoidable_vertex(g, v)).collect()
}

/// `N[v]` is a potential maximal clique exactly when `v` is avoidable.
pub fn closed_neighborhood_is_pmc(g: &Graph, v: usize) -> bool {
    is_avoidable_vertex(g, v)
}

/// Avoidability of the induced `P_2` on the endpoints of `e`.
pub fn is_avoidable_edge(g: &Graph, e: EdgeId) -> Result<bool> {
    e.check_in(g)?;
    Ok(first_failing_extension(g, &[e.lo(), e.hi()]).is_none())
}

pub fn avoidable_edges(g: &Graph) -> Vec<EdgeId> {
    g.edges()
        .filter(|e| first_failing_extension(g, &[e.lo(), e.hi()]).is_none())
        .collect()
}

/// The vertex of `L(g)` corresponding to `e` is avoidable.
pub fn is_pseudo_avoidable_edge(g: &Graph, e: EdgeId) -> Result<bool> {
    e.check_in(g)?;
    let (lg, mapping) = line_graph(g)?;
    let idx = mapping.binary_search(&e).expect("edge present in line graph mapping");
    Ok(is_avoidable_vertex(&lg, idx))
}

/// `N(u) ∪ N(v)` induces a complete bipartite graph (which then has `u` and
/// `v` on opposite sides).
pub fn is_bisimplicial_edge(g: &Graph, e: EdgeId) -> Result<bool> {
    e.check_in(g)?;
    let (u, v) = e.endpoints();
    let mut side = vec![NIL; g.n()];
    let mut members = Vec::new();
    for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
        if side[w] == NIL {
            side[w] = 2;
            members.push(w);
        }
    }
    // G[S] is connected through the edge uv, so its bipartition, if any, is
    // forced by BFS from u.
    side[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if side[b] == 2 {
                side[b] = 1 - side[a];
                queue.push_back(b);
            }
        }
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if g.has_edge(a, b) != (side[a] != side[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All induced `P_k`, each listed once: lexicographically, in the orientation
/// with `first < last` when `k >= 2`.
pub fn induced_paths(g: &Graph, k: usize) -> Vec<InducedPath> {
    let mut out = Vec::new();
    if k == 0 || k > g.n() {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        on_path[s] = true;
        grow_induced(g, k, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out
}

fn grow_induced(
    g: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<InducedPath>,
) {
    if path.len() == k {
        if k == 1 || path[0] < path[k - 1] {
            out.push(InducedPath::new_unchecked(path.clone()));
        }
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if on_path[w] {
            continue;
        }
        let chordless = path[..path.len() - 1].iter().all(|&p| !g.has_edge(p, w));
        if chordless {
            path.push(w);
            on_path[w] = true;
            grow_induced(g, k, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}
