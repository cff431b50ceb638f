//! Automorphisms by backtracking with degree-signature pruning.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const AUTOMORPHISM_BOUND: usize = 14;

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.n() > bound {
        return Err(Error::BoundExceeded {
            what: "vertices for automorphism search",
            bound,
            actual: g.n(),
        });
    }
    Ok(())
}

struct Search<'a> {
    g: &'a Graph,
    signature: Vec<(usize, Vec<usize>)>,
    /// Vertices in assignment order: prescribed ones first, then BFS order.
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, prescribed: &[(usize, usize)]) -> Self {
        let signature = g
            .vertices()
            .map(|v| {
                let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
                nd.sort_unstable();
                (g.degree(v), nd)
            })
            .collect();
        let mut order: Vec<usize> = Vec::with_capacity(g.n());
        let mut seen = vec![false; g.n()];
        for &(v, _) in prescribed {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
        let (mut i, mut seed) = (0, 0);
        loop {
            while i < order.len() {
                for &w in g.neighbors(order[i]) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
                i += 1;
            }
            while seed < g.n() && seen[seed] {
                seed += 1;
            }
            if seed == g.n() {
                break;
            }
            seen[seed] = true;
            order.push(seed);
        }
        Search {
            g,
            signature,
            order,
            image: vec![UNSET; g.n()],
            used: vec![false; g.n()],
            assigned: Vec::new(),
        }
    }

    fn consistent(&self, v: usize, x: usize) -> bool {
        if self.used[x] || self.signature[v] != self.signature[x] {
            return false;
        }
        self.assigned
            .iter()
            .all(|&u| self.g.has_edge(u, v) == self.g.has_edge(self.image[u], x))
    }

    fn assign(&mut self, v: usize, x: usize) {
        self.image[v] = x;
        self.used[x] = true;
        self.assigned.push(v);
    }

    fn unassign(&mut self, v: usize) {
        self.used[self.image[v]] = false;
        self.image[v] = UNSET;
        self.assigned.pop();
    }

    /// Extends the assignment from `order[depth]` on; `visit` returns true to stop.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.image);
        }
        let v = self.order[depth];
        if self.image[v] != UNSET {
            return self.run(depth + 1, visit);
        }
        // An already-mapped neighbor restricts the image to its image's neighbors.
        let anchor = self.g.neighbors(v).iter().find(|&&w| self.image[w] != UNSET).copied();
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.g.neighbors(self.image[w]).to_vec(),
            None => self.g.vertices().collect(),
        };
        for x in candidates {
            if self.consistent(v, x) {
                self.assign(v, x);
                if self.run(depth + 1, visit) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }

    /// Applies prescribed pairs in order; false if they are inconsistent.
    fn prescribe(&mut self, prescribed: &[(usize, usize)]) -> bool {
        for &(v, x) in prescribed {
            if self.image[v] != UNSET {
                if self.image[v] != x {
                    return false;
                }
                continue;
            }
            if !self.consistent(v, x) {
                return false;
            }
            self.assign(v, x);
        }
        true
    }
}

/// The full automorphism group as explicit permutations, in lexicographic order
/// of the assignment search.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_bound(g, AUTOMORPHISM_BOUND)?;
    let mut out = Vec::new();
    let mut search = Search::new(g, &[]);
    search.run(0, &mut |perm| {
        out.push(perm.to_vec());
        false
    });
    out.sort();
    Ok(out)
}

/// Some automorphism extending the partial map `prescribed`.
pub fn find_automorphism(g: &Graph, prescribed: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    check_bound(g, AUTOMORPHISM_BOUND)?;
    for &(v, x) in prescribed {
        g.check_vertex(v)?;
        g.check_vertex(x)?;
    }
    let mut search = Search::new(g, prescribed);
    if !search.prescribe(prescribed) {
        return Ok(None);
    }
    let mut found = None;
    search.run(0, &mut |perm| {
        found = Some(perm.to_vec());
        true
    });
    Ok(found)
}

/// Vertex orbits, each sorted, ordered by smallest member.
pub fn vertex_orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_bound(g, AUTOMORPHISM_BOUND)?;
    let mut orbit_of = vec![UNSET; g.n()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in g.vertices() {
        if orbit_of[v] != UNSET {
            continue;
        }
        let id = orbits.len();
        orbit_of[v] = id;
        let mut orbit = vec![v];
        let unplaced: Vec<usize> = (v + 1..g.n()).filter(|&x| orbit_of[x] == UNSET).collect();
        for x in unplaced {
            if find_automorphism(g, &[(v, x)])?.is_some() {
                orbit_of[x] = id;
                orbit.push(x);
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    check_bound(g, AUTOMORPHISM_BOUND)?;
    for x in 1..g.n() {
        if find_automorphism(g, &[(0, x)])?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every edge is the image of the first edge. Edgeless graphs count as
/// edge-transitive.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    check_bound(g, AUTOMORPHISM_BOUND)?;
    let edges = g.edge_list();
    let Some(&first) = edges.first() else {
        return Ok(true);
    };
    let (a, b) = first.endpoints();
    for &f in &edges[1..] {
        let (x, y) = f.endpoints();
        if find_automorphism(g, &[(a, x), (b, y)])?.is_none()
            && find_automorphism(g, &[(a, y), (b, x)])?.is_none()
        {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::fixtures::{circulant, load_fixture, petersen};

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
        g.vertices().all(|u| g.vertices().all(|v| u == v || g.has_edge(u, v) == g.has_edge(p[u], p[v])))
    }

    #[test]
    fn group_orders() {
        let factorial = [1, 1, 2, 6, 24, 120];
        for n in 1..=5 {
            assert_eq!(automorphisms(&complete(n)).unwrap().len(), factorial[n]);
        }
        let c5 = circulant(5, &[1]);
        let group = automorphisms(&c5).unwrap();
        assert_eq!(group.len(), 10);
        assert!(group.iter().all(|p| is_automorphism(&c5, p)));
        let prism = load_fixture("fig3_prism").unwrap().graph;
        assert_eq!(automorphisms(&prism).unwrap().len(), 12);
        assert_eq!(automorphisms(&petersen()).unwrap().len(), 120);
        assert_eq!(automorphisms(&circulant(13, &[1, 5])).unwrap().len(), 52);
        assert!(automorphisms(&Graph::new(15).unwrap()).unwrap_err().is_bound_exceeded());
    }

    #[test]
    fn transitivity() {
        let prism = load_fixture("fig3_prism").unwrap().graph;
        assert!(is_vertex_transitive(&prism).unwrap());
        assert!(!is_edge_transitive(&prism).unwrap());
        let k23 = load_fixture("fig1b").unwrap().graph;
        assert!(is_edge_transitive(&k23).unwrap());
        assert!(!is_vertex_transitive(&k23).unwrap());
        assert_eq!(vertex_orbits(&k23).unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(is_edge_transitive(&circulant(13, &[1, 5])).unwrap());
        assert!(is_vertex_transitive(&petersen()).unwrap());
        assert!(is_edge_transitive(&petersen()).unwrap());
        // Path P_4: the middle edge is not an image of an end edge.
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_edge_transitive(&p4).unwrap());
    }

    #[test]
    fn prescribed_maps() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_automorphism(&p3, &[(0, 2)]).unwrap(), Some(vec![2, 1, 0]));
        assert_eq!(find_automorphism(&p3, &[(0, 1)]).unwrap(), None);
        assert_eq!(find_automorphism(&p3, &[(0, 2), (2, 2)]).unwrap(), None);
    }
}
