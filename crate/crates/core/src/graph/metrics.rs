use std::collections::VecDeque;

use super::Graph;

/// BFS distances from `s`; `None` marks vertices in other components.
pub fn distances_from(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap() + 1;
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest distance from `s`, or `None` (infinite) if some vertex is unreachable.
pub fn eccentricity(g: &Graph, s: usize) -> Option<usize> {
    distances_from(g, s)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

/// Maximum eccentricity, or `None` (infinite) for disconnected graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    g.vertices()
        .try_fold(0, |acc, s| eccentricity(g, s).map(|e| acc.max(e)))
}

/// Components as ascending vertex lists, ordered by their minimum vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    distances_from(g, 0).iter().all(Option::is_some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_subgraph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Path 0-1-2-4-5 with pendant 3 on vertex 2.
    fn fig1a() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 4), (4, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn path_distances() {
        let p4 = path(4);
        assert_eq!(distances_from(&p4, 0)[3], Some(3));
        assert_eq!(eccentricity(&p4, 0), Some(3));
        assert_eq!(eccentricity(&p4, 1), Some(2));
        assert_eq!(diameter(&p4), Some(3));
    }

    #[test]
    fn complete_graph_diameter() {
        for n in 2..7 {
            let k = Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
                .unwrap();
            assert_eq!(diameter(&k), Some(1));
        }
        assert_eq!(diameter(&Graph::new(1).unwrap()), Some(0));
    }

    #[test]
    fn fixture_diameter_by_hand() {
        // Eccentricities worked out by hand: 0 and 5 are at distance 4.
        let g = fig1a();
        let ecc: Vec<_> = g.vertices().map(|v| eccentricity(&g, v).unwrap()).collect();
        assert_eq!(ecc, vec![4, 3, 2, 3, 3, 4]);
        assert_eq!(diameter(&g), Some(4));
    }

    #[test]
    fn disconnected_is_infinite() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&g), None);
        assert_eq!(eccentricity(&g, 0), None);
        assert_eq!(distances_from(&g, 0), vec![Some(0), Some(1), None, None]);
        assert!(!is_connected(&g));
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&path(4)), vec![vec![0, 1, 2, 3]]);
        let two_k2 = Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(connected_components(&two_k2), vec![vec![0, 3], vec![1, 2]]);

        // Deleting N[2] = {1, 2, 3, 4} from the fixture leaves 0 and 5 isolated.
        let g = fig1a();
        let (rest, remap) = induced_subgraph(&g, &[0, 5]).unwrap();
        let comps: Vec<Vec<usize>> = connected_components(&rest)
            .into_iter()
            .map(|c| c.into_iter().map(|v| remap[v]).collect())
            .collect();
        assert_eq!(comps, vec![vec![0], vec![5]]);
    }

    #[test]
    fn triangle_inequality_on_small_graphs() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)])
            .unwrap();
        let d: Vec<Vec<usize>> = g
            .vertices()
            .map(|s| distances_from(&g, s).into_iter().map(Option::unwrap).collect())
            .collect();
        for a in g.vertices() {
            assert_eq!(d[a][a], 0);
            for b in g.vertices() {
                assert_eq!(d[a][b], d[b][a]);
                for c in g.vertices() {
                    assert!(d[a][c] <= d[a][b] + d[b][c]);
                }
            }
        }
    }
}
