//! Bisimplicial vertices and orderings, and maximum weight cliques over a
//! bisimplicial elimination ordering.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{max_flow, FlowNetwork};
use crate::graph::{complement, Graph, WeightedGraph};
use crate::search::{lbfs, VertexOrdering};

/// Vertex bound for [`brute_force_max_weight_clique`].
pub const BRUTE_CLIQUE_BOUND: usize = 24;

/// Two-colors the complement of `G[vertices]`; `None` if it is not bipartite.
/// Colors are returned parallel to `vertices`.
fn cobipartite_coloring(g: &Graph, vertices: &[usize]) -> Option<Vec<bool>> {
    let k = vertices.len();
    let mut color: Vec<Option<bool>> = vec![None; k];
    let mut stack = Vec::new();
    for s in 0..k {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        stack.push(s);
        while let Some(i) = stack.pop() {
            let ci = color[i].unwrap();
            for j in 0..k {
                if j == i || g.has_edge(vertices[i], vertices[j]) {
                    continue;
                }
                match color[j] {
                    None => {
                        color[j] = Some(!ci);
                        stack.push(j);
                    }
                    Some(cj) if cj == ci => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// `N(v)` is the union of two cliques.
pub fn is_bisimplicial_vertex(g: &Graph, v: usize) -> bool {
    cobipartite_coloring(g, g.neighbors(v)).is_some()
}

fn earlier_neighbors(g: &Graph, sigma: &VertexOrdering, v: usize) -> Vec<usize> {
    let pv = sigma.position(v);
    g.neighbors(v).iter().copied().filter(|&w| sigma.position(w) < pv).collect()
}

/// Each `v_i` is bisimplicial in `G[{v_1, …, v_i}]`.
pub fn is_bisimplicial_elimination_ordering(g: &Graph, sigma: &VertexOrdering) -> bool {
    sigma.check_for(g).is_ok()
        && sigma
            .sequence()
            .iter()
            .all(|&v| cobipartite_coloring(g, &earlier_neighbors(g, sigma, v)).is_some())
}

/// Tries the LBFS ordering first, then falls back to repeatedly removing the
/// smallest bisimplicial vertex. Bisimpliciality is inherited by induced
/// subgraphs, so the greedy choice never blocks an ordering that exists.
pub fn bisimplicial_elimination_ordering(g: &Graph) -> Option<VertexOrdering> {
    let fast = lbfs(g, None).expect("lbfs without a start vertex");
    if is_bisimplicial_elimination_ordering(g, &fast) {
        return Some(fast);
    }
    greedy_bisimplicial_ordering(g)
}

pub fn greedy_bisimplicial_ordering(g: &Graph) -> Option<VertexOrdering> {
    let mut alive = vec![true; g.n()];
    let mut reversed = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = g.vertices().find(|&v| {
            if !alive[v] {
                return false;
            }
            let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
            cobipartite_coloring(g, &nbrs).is_some()
        })?;
        alive[v] = false;
        reversed.push(v);
    }
    reversed.reverse();
    Some(VertexOrdering::new(reversed).expect("greedy order is a permutation"))
}

fn check_side(g: &Graph, side: &[usize], name: &str) -> Result<()> {
    if g.is_independent(side) {
        Ok(())
    } else {
        Err(Error::InvalidBipartition(format!("part {name} is not independent")))
    }
}

/// Maximum weight independent set of a bipartite graph with parts `a`, `b`,
/// together with the minimum cut value (the minimum weight vertex cover).
pub fn bipartite_mwis_with_cut(
    wg: &WeightedGraph,
    a: &[usize],
    b: &[usize],
) -> Result<(Vec<usize>, u64)> {
    let g = wg.graph();
    let n = g.n();
    let mut part = vec![None; n];
    for (&v, side) in a.iter().map(|v| (v, false)).chain(b.iter().map(|v| (v, true))) {
        g.check_vertex(v)?;
        if part[v].replace(side).is_some() {
            return Err(Error::InvalidBipartition(format!("vertex {v} listed twice")));
        }
    }
    if let Some(v) = part.iter().position(Option::is_none) {
        return Err(Error::InvalidBipartition(format!("vertex {v} in neither part")));
    }
    check_side(g, a, "A")?;
    check_side(g, b, "B")?;

    let (s, t) = (n, n + 1);
    let infinite = wg.total_weight() + 1;
    let mut net = FlowNetwork::new(n + 2, s, t)?;
    for &x in a {
        net.add_arc(s, x, wg.weight(x))?;
        for &y in g.neighbors(x) {
            net.add_arc(x, y, infinite)?;
        }
    }
    for &y in b {
        net.add_arc(y, t, wg.weight(y))?;
    }
    let flow = max_flow(&net);
    let mut set: Vec<usize> = a
        .iter()
        .copied()
        .filter(|&x| flow.source_side[x])
        .chain(b.iter().copied().filter(|&y| !flow.source_side[y]))
        .collect();
    set.sort_unstable();
    Ok((set, flow.value))
}

pub fn bipartite_mwis(wg: &WeightedGraph, a: &[usize], b: &[usize]) -> Result<Vec<usize>> {
    Ok(bipartite_mwis_with_cut(wg, a, b)?.0)
}

/// Maximum weight clique of a graph whose complement is bipartite.
pub fn max_weight_clique_cobipartite(wg: &WeightedGraph) -> Result<Vec<usize>> {
    let g = wg.graph();
    let all: Vec<usize> = g.vertices().collect();
    let color = cobipartite_coloring(g, &all).ok_or(Error::NotCobipartite)?;
    let (a, b): (Vec<usize>, Vec<usize>) = all.iter().partition(|&&v| !color[v]);
    let co = WeightedGraph::new(complement(g), wg.weights().to_vec())?;
    bipartite_mwis(&co, &a, &b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueStep {
    pub vertex: usize,
    /// Heaviest clique containing `vertex` among it and its earlier neighbors.
    pub clique: Vec<usize>,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub vertices: Vec<usize>,
    pub weight: u64,
    pub ordering_used: Option<VertexOrdering>,
    pub steps: Vec<CliqueStep>,
}

/// Walks a bisimplicial elimination ordering from the back; at each vertex the
/// heaviest clique through it lives in its (cobipartite) earlier neighborhood.
pub fn max_weight_clique(wg: &WeightedGraph) -> Result<CliqueResult> {
    let g = wg.graph();
    let sigma = bisimplicial_elimination_ordering(g).ok_or(Error::NoBisimplicialOrdering)?;
    max_weight_clique_with_ordering(wg, &sigma)
}

pub fn max_weight_clique_with_ordering(
    wg: &WeightedGraph,
    sigma: &VertexOrdering,
) -> Result<CliqueResult> {
    let g = wg.graph();
    if !is_bisimplicial_elimination_ordering(g, sigma) {
        return Err(Error::InvalidOrdering(
            "not a bisimplicial elimination ordering".into(),
        ));
    }
    let mut best: Option<(Vec<usize>, u64)> = None;
    let mut steps = Vec::with_capacity(g.n());
    for &v in sigma.sequence().iter().rev() {
        let nbrs = earlier_neighbors(g, sigma, v);
        let mut clique = vec![v];
        if !nbrs.is_empty() {
            let (sub, remap) = wg.induced_subgraph(&nbrs)?;
            clique.extend(max_weight_clique_cobipartite(&sub)?.into_iter().map(|i| remap[i]));
        }
        clique.sort_unstable();
        let weight = wg.weight_of(&clique);
        if best.as_ref().is_none_or(|(_, w)| weight > *w) {
            best = Some((clique.clone(), weight));
        }
        steps.push(CliqueStep { vertex: v, clique, weight });
    }
    let (vertices, weight) = best.expect("graphs have at least one vertex");
    Ok(CliqueResult { vertices, weight, ordering_used: Some(sigma.clone()), steps })
}

/// Exact maximum weight clique by branch and bound; first optimum found wins.
pub fn brute_force_max_weight_clique(wg: &WeightedGraph) -> Result<CliqueResult> {
    let g = wg.graph();
    if g.n() > BRUTE_CLIQUE_BOUND {
        return Err(Error::BoundExceeded {
            what: "vertices for brute-force clique search",
            bound: BRUTE_CLIQUE_BOUND,
            actual: g.n(),
        });
    }
    let masks = g.masks().unwrap();
    let mut best = (0u64, 0u64, false);
    branch(wg, &masks, 0, 0, (1u64 << g.n()) - 1, &mut best);
    let vertices: Vec<usize> = crate::graph::BitIter(best.1).collect();
    Ok(CliqueResult { weight: wg.weight_of(&vertices), vertices, ordering_used: None, steps: Vec::new() })
}

fn branch(wg: &WeightedGraph, masks: &[u64], chosen: u64, weight: u64, cand: u64, best: &mut (u64, u64, bool)) {
    if cand == 0 {
        if !best.2 || weight > best.0 {
            *best = (weight, chosen, true);
        }
        return;
    }
    let bound: u64 = weight + crate::graph::BitIter(cand).map(|v| wg.weight(v)).sum::<u64>();
    if best.2 && bound <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    branch(wg, masks, chosen | 1 << v, weight + wg.weight(v), rest & masks[v], best);
    branch(wg, masks, chosen, weight, rest, best);
}
