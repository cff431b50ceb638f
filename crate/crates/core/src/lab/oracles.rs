//! Exponential reference implementations used to cross-check the fast paths.
//! They share no code with the algorithms they check beyond `Graph` itself.

use crate::error::{Error, Result};
use crate::graph::{BitIter, EdgeId, Graph};
use crate::orient::{holes, Orientation};
use crate::search::VertexOrdering;

/// Largest vertex count for the subset-based oracles.
pub const SUBSET_ORACLE_BOUND: usize = 20;
/// Largest edge count for the orientation oracles.
pub const ORIENTATION_ORACLE_BOUND: usize = 20;

fn bound(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::BoundExceeded { what, bound: limit, actual })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Whether `G[set]` is a cycle (connected, every vertex of degree two, at
/// least three vertices).
fn induces_cycle(adj: &[u64], set: u64) -> bool {
    if set.count_ones() < 3 || BitIter(set).any(|v| (adj[v] & set).count_ones() != 2) {
        return false;
    }
    let start = set.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let next = BitIter(frontier).fold(0, |acc, v| acc | adj[v]) & set & !reached;
        reached |= next;
        frontier = next;
    }
    reached == set
}

/// Vertex sets of all induced cycles (triangles included), as bitmasks.
pub fn induced_cycle_sets(g: &Graph) -> Result<Vec<u64>> {
    bound("vertices for induced cycle enumeration", SUBSET_ORACLE_BOUND, g.n())?;
    let adj = masks(g);
    Ok((0..1u64 << g.n()).filter(|&s| induces_cycle(&adj, s)).collect())
}

fn path_is_induced(adj: &[u64], path: &[usize]) -> bool {
    let distinct = path.iter().fold(0u64, |m, &v| m | 1 << v).count_ones() as usize == path.len();
    distinct
        && path.iter().enumerate().all(|(i, &a)| {
            path.iter().enumerate().skip(i + 1).all(|(j, &b)| (adj[a] >> b & 1 == 1) == (j == i + 1))
        })
}

/// Some induced cycle contains every vertex of the induced path `path` and
/// at least one more vertex. In an induced cycle the vertices of an induced
/// path always appear consecutively, so this is exactly "closes".
fn closes_with(cycles: &[u64], path: &[usize]) -> bool {
    let p = path.iter().fold(0u64, |m, &v| m | 1 << v);
    cycles.iter().any(|&c| c & p == p && c != p)
}

/// Closability and avoidability by listing induced cycles and extensions
/// directly from the definitions.
pub struct CycleOracle {
    adj: Vec<u64>,
    cycles: Vec<u64>,
}

impl CycleOracle {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(CycleOracle { adj: masks(g), cycles: induced_cycle_sets(g)? })
    }

    pub fn closes(&self, path: &[usize]) -> bool {
        closes_with(&self.cycles, path)
    }

    /// All `(x, y)` making `x·path·y` an induced path (`x < y` for one vertex).
    pub fn extensions(&self, path: &[usize]) -> Vec<(usize, usize)> {
        let n = self.adj.len();
        let mut out = Vec::new();
        let mut ext = Vec::with_capacity(path.len() + 2);
        for x in 0..n {
            for y in 0..n {
                if path.len() == 1 && y <= x {
                    continue;
                }
                ext.clear();
                ext.push(x);
                ext.extend_from_slice(path);
                ext.push(y);
                if path_is_induced(&self.adj, &ext) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_avoidable(&self, path: &[usize]) -> bool {
        self.extensions(path).into_iter().all(|(x, y)| {
            let mut ext = vec![x];
            ext.extend_from_slice(path);
            ext.push(y);
            self.closes(&ext)
        })
    }

    /// All induced paths on `k` vertices in both directions.
    pub fn induced_paths(&self, k: usize) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn rec(adj: &[u64], n: usize, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if path.len() == k {
                if path_is_induced(adj, path) {
                    out.push(path.clone());
                }
                return;
            }
            for v in 0..n {
                path.push(v);
                rec(adj, n, k, path, out);
                path.pop();
            }
        }
        rec(&self.adj, n, k, &mut path, &mut out);
        out
    }
}

fn orientation_from_bits(g: &Graph, bits: u64) -> Orientation {
    let forward = (0..g.m()).map(|i| bits >> i & 1 == 1).collect();
    Orientation::new(g.clone(), forward).expect("one direction per edge")
}

/// First 1-perfect orientation in binary counting order over all `2^m`.
pub fn brute_force_one_perfect(g: &Graph) -> Result<Option<Orientation>> {
    bound("edges for orientation brute force", ORIENTATION_ORACLE_BOUND, g.m())?;
    let edges = g.edge_list();
    let idx = |a: usize, b: usize| edges.binary_search(&EdgeId::new(a, b).unwrap()).unwrap();
    // Forbidden pairs: v -> u and v -> w with u, w non-adjacent, as (mask, value).
    let mut forbidden = Vec::new();
    for v in g.vertices() {
        for &u in g.neighbors(v) {
            for &w in g.neighbors(v) {
                if u < w && !g.has_edge(u, w) {
                    let (eu, ew) = (idx(v, u), idx(v, w));
                    let mask = 1u64 << eu | 1 << ew;
                    let value = (u64::from(v < u) << eu) | (u64::from(v < w) << ew);
                    forbidden.push((mask, value));
                }
            }
        }
    }
    Ok((0..1u64 << g.m())
        .find(|&bits| forbidden.iter().all(|&(m, val)| bits & m != val))
        .map(|bits| orientation_from_bits(g, bits)))
}

/// First hole-cyclic orientation in binary counting order over all `2^m`.
pub fn brute_force_hole_cyclic(g: &Graph) -> Result<Option<Orientation>> {
    bound("edges for orientation brute force", ORIENTATION_ORACLE_BOUND, g.m())?;
    let edges = g.edge_list();
    let idx = |a: usize, b: usize| edges.binary_search(&EdgeId::new(a, b).unwrap()).unwrap();
    // A hole is cyclic iff the direction bits agree with its forward pattern
    // on every edge, or disagree on every edge.
    let constraints: Vec<(u64, u64)> = holes(g, None)?
        .iter()
        .map(|c| {
            let k = c.len();
            (0..k).fold((0, 0), |(mask, pattern), i| {
                let (a, b) = (c[i], c[(i + 1) % k]);
                let e = idx(a, b);
                (mask | 1 << e, pattern | u64::from(a < b) << e)
            })
        })
        .collect();
    Ok((0..1u64 << g.m())
        .find(|&bits| {
            constraints.iter().all(|&(mask, pattern)| {
                let diff = (bits ^ pattern) & mask;
                diff == 0 || diff == mask
            })
        })
        .map(|bits| orientation_from_bits(g, bits)))
}

/// Whether some ordering is a bisimplicial elimination ordering, by trying
/// every permutation (n ≤ 8).
pub fn brute_force_has_bisimplicial_ordering(g: &Graph) -> Result<Option<VertexOrdering>> {
    bound("vertices for ordering brute force", 8, g.n())?;
    let adj = masks(g);
    // Neighborhood of v inside `set` splits into two cliques.
    let bisimplicial_in = |v: usize, set: u64| {
        let nb: Vec<usize> = BitIter(adj[v] & set).collect();
        let mut color = vec![2u8; nb.len()];
        for s in 0..nb.len() {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..nb.len() {
                    if i != j && adj[nb[i]] >> nb[j] & 1 == 0 {
                        if color[j] == 2 {
                            color[j] = 1 - color[i];
                            stack.push(j);
                        } else if color[j] == color[i] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    };
    let mut perm: Vec<usize> = g.vertices().collect();
    loop {
        let mut set = 0u64;
        let ok = perm.iter().all(|&v| {
            set |= 1 << v;
            bisimplicial_in(v, set)
        });
        if ok {
            return Ok(Some(VertexOrdering::new(perm)?));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Lexicographic successor; false after the last permutation.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Chordality by searching for an induced cycle of length at least four.
pub fn brute_force_is_chordal(g: &Graph) -> Result<bool> {
    Ok(induced_cycle_sets(g)?.iter().all(|c| c.count_ones() == 3))
}

/// Inclusion-minimal chordal fills over every set of non-edges, minimality
/// checked against all proper subsets (n ≤ 6).
pub fn brute_force_minimal_fills(g: &Graph) -> Result<Vec<Vec<EdgeId>>> {
    bound("vertices for fill brute force", 6, g.n())?;
    let non_edges: Vec<EdgeId> = g
        .vertices()
        .flat_map(|a| (a + 1..g.n()).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .map(|(a, b)| EdgeId::new(a, b).unwrap())
        .collect();
    let base = masks(g);
    let chordal = |subset: u32| {
        let mut adj = base.clone();
        for i in BitIter(subset as u64) {
            let (a, b) = non_edges[i].endpoints();
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        (0..1u64 << g.n()).all(|s| s.count_ones() == 3 || !induces_cycle(&adj, s))
    };
    let total = 1u32 << non_edges.len();
    let good: Vec<bool> = (0..total).map(chordal).collect();
    let mut out = Vec::new();
    for f in 0..total {
        if !good[f as usize] {
            continue;
        }
        // Every proper subset, enumerated by the standard submask walk.
        let mut minimal = true;
        if f != 0 {
            let mut sub = (f - 1) & f;
            loop {
                if good[sub as usize] {
                    minimal = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        if minimal {
            out.push(BitIter(f as u64).map(|i| non_edges[i]).collect());
        }
    }
    Ok(out)
}
