//! Seeded random instances and exhaustive labeled enumeration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orient::{is_out_semi_complete, recognize_one_perfectly_orientable, Digraph};

/// Largest `n` for which [`all_labeled_graphs`] is offered.
pub const LABELED_BOUND: usize = 7;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyVertexSet)
    } else {
        Ok(())
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| r.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges)
}

/// `m` uniformly drawn vertex pairs; repeats collapse, so the edge count can
/// fall slightly short of `m` on dense requests.
pub fn random_graph_m(n: usize, m: usize, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if n < 2 && m > 0 {
        return Err(Error::InvalidArgument("edges requested on one vertex".into()));
    }
    let mut r = rng(seed);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
        if a != b {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, edges)
}

/// A random tree of cliques: each new vertex joins a random subset of a
/// previously created clique, and that subset plus the new vertex becomes a
/// clique of its own. Reverse insertion order is a perfect elimination ordering.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidArgument(format!("density {density} outside [0, 1]")));
    }
    let mut r = rng(seed);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let host = cliques.choose(&mut r).unwrap().clone();
        let mut joined: Vec<usize> = host.iter().copied().filter(|_| r.gen_bool(density)).collect();
        if joined.is_empty() && r.gen_bool(density.max(0.5)) {
            joined.push(*host.choose(&mut r).unwrap());
        }
        edges.extend(joined.iter().map(|&u| (u, v)));
        joined.push(v);
        cliques.push(joined);
    }
    Graph::from_edges(n, edges)
}

/// Integer weights drawn uniformly from `1..=max`.
pub fn random_weights(n: usize, max: u64, seed: u64) -> Vec<u64> {
    let mut r = rng(seed);
    (0..n).map(|_| r.gen_range(1..=max.max(1))).collect()
}

/// Random bipartite graph with parts `0..a` and `a..a+b`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_n(a + b)?;
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .filter(|_| r.gen_bool(p))
        .collect();
    Graph::from_edges(a + b, edges)
}

/// An out-semi-complete digraph: a 1-perfect orientation of a random graph
/// (or of a random chordal graph when the first is not 1-perfectly
/// orientable), followed by random opposite arcs kept only while every
/// out-neighborhood stays semi-complete.
pub fn random_out_semi_complete(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    let g = random_graph(n, p, seed)?;
    let orientation = match recognize_one_perfectly_orientable(&g) {
        Some(o) => o,
        None => {
            let chordal = random_chordal(n, p, seed ^ 0x5eed)?;
            recognize_one_perfectly_orientable(&chordal).expect("chordal graphs are 1-p.o.")
        }
    };
    let mut arcs = orientation.arcs();
    let mut r = rng(seed.wrapping_add(1));
    let mut order: Vec<(usize, usize)> = arcs.clone();
    order.shuffle(&mut r);
    for (u, v) in order {
        if r.gen_bool(0.3) {
            arcs.push((v, u));
            let d = Digraph::new(n, arcs.iter().copied())?;
            if !is_out_semi_complete(&d) {
                arcs.pop();
            }
        }
    }
    let d = Digraph::new(n, arcs)?;
    debug_assert!(is_out_semi_complete(&d));
    Ok(d)
}

/// The labeled graph on `n` vertices whose edge set is given by the bits of
/// `code` over pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut masks = vec![0u64; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_masks(&masks)
}

/// All `2^C(n,2)` labeled graphs on `n` vertices.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_n(n)?;
    if n > LABELED_BOUND {
        return Err(Error::BoundExceeded {
            what: "vertices for labeled enumeration",
            bound: LABELED_BOUND,
            actual: n,
        });
    }
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |code| labeled_graph(n, code)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::semi_complete_in_vertices;
    use crate::triangulation::is_chordal;

    #[test]
    fn extreme_probabilities() {
        assert_eq!(random_graph(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap().m(), 15);
        assert!(random_graph(3, 1.5, 1).is_err());
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(random_graph(20, 0.3, 9).unwrap(), random_graph(20, 0.3, 9).unwrap());
        assert_eq!(random_chordal(20, 0.5, 9).unwrap(), random_chordal(20, 0.5, 9).unwrap());
        assert_ne!(random_graph(20, 0.3, 9).unwrap(), random_graph(20, 0.3, 10).unwrap());
    }

    #[test]
    fn chordal_generator_is_chordal() {
        for seed in 0..200 {
            let g = random_chordal(1 + (seed as usize % 25), 0.6, seed).unwrap();
            assert!(is_chordal(&g).0);
        }
    }

    #[test]
    fn edge_count_generator() {
        let g = random_graph_m(1000, 5000, 3).unwrap();
        assert!(g.m() > 4950 && g.m() <= 5000);
    }

    #[test]
    fn labeled_enumeration() {
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(labeled_graph(3, 0b101).edge_list().len(), 2);
        assert!(all_labeled_graphs(8).is_err());
    }

    #[test]
    fn out_semi_complete_generator() {
        for seed in 0..50 {
            let d = random_out_semi_complete(2 + seed as usize % 9, 0.5, seed).unwrap();
            assert!(is_out_semi_complete(&d));
            assert!(semi_complete_in_vertices(&d).len() >= 2);
        }
    }
}
