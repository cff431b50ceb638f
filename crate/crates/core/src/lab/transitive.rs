//! Path-closing checks for vertex- and edge-transitive graphs.

use serde::Serialize;

use super::automorphism::{is_edge_transitive, is_vertex_transitive};
use crate::avoid::{close_extension, induced_paths};
use crate::error::Result;
use crate::graph::{Graph, InducedPath};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCheck {
    pub checked: usize,
    pub failure: Option<Vec<usize>>,
}

impl PathCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    /// Every induced `P_3` closes to an induced cycle (vertex-transitive graphs).
    pub induced_p3: Option<PathCheck>,
    /// Every path with three edges lies on a cycle (edge-transitive graphs).
    pub three_edge_paths: Option<PathCheck>,
    /// Every induced `P_4` closes to an induced cycle (edge-transitive graphs).
    pub induced_p4: Option<PathCheck>,
}

impl TransitivityReport {
    pub fn holds(&self) -> bool {
        [&self.induced_p3, &self.three_edge_paths, &self.induced_p4]
            .into_iter()
            .flatten()
            .all(PathCheck::passed)
    }
}

fn check_induced(g: &Graph, k: usize) -> Result<PathCheck> {
    let paths = induced_paths(g, k);
    let mut failure = None;
    for p in &paths {
        if close_extension(g, p)?.is_none() {
            failure = Some(p.vertices().to_vec());
            break;
        }
    }
    Ok(PathCheck { checked: paths.len(), failure })
}

/// Whether `a` reaches `b` without passing through `avoid`.
fn connected_avoiding(g: &Graph, a: usize, b: usize, avoid: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in avoid {
        seen[v] = true;
    }
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Paths `v1 v2 v3 v4` on distinct vertices (chords allowed): such a path lies
/// on a cycle iff `v1` reaches `v4` in `G - {v2, v3}`.
pub fn check_paths_close_to_cycles(g: &Graph, edges: usize) -> PathCheck {
    let mut checked = 0;
    let mut failure = None;
    let mut path = Vec::new();
    walk_simple_paths(g, edges + 1, &mut path, &mut |p| {
        if p[0] > p[p.len() - 1] {
            return true;
        }
        checked += 1;
        let (first, last) = (p[0], p[p.len() - 1]);
        if connected_avoiding(g, first, last, &p[1..p.len() - 1]) {
            true
        } else {
            failure = Some(p.to_vec());
            false
        }
    });
    PathCheck { checked, failure }
}

fn walk_simple_paths(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == len {
        return visit(path);
    }
    let next: Vec<usize> = match path.last() {
        None => g.vertices().collect(),
        Some(&u) => g.neighbors(u).to_vec(),
    };
    for w in next {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        let go_on = walk_simple_paths(g, len, path, visit);
        path.pop();
        if !go_on {
            return false;
        }
    }
    true
}

pub fn verify_transitive_corollaries(g: &Graph) -> Result<TransitivityReport> {
    let vertex_transitive = is_vertex_transitive(g)?;
    let edge_transitive = is_edge_transitive(g)? && g.m() > 0;
    let induced_p3 = if vertex_transitive { Some(check_induced(g, 3)?) } else { None };
    let (three_edge_paths, induced_p4) = if edge_transitive {
        (Some(check_paths_close_to_cycles(g, 3)), Some(check_induced(g, 4)?))
    } else {
        (None, None)
    };
    Ok(TransitivityReport {
        vertex_transitive,
        edge_transitive,
        induced_p3,
        three_edge_paths,
        induced_p4,
    })
}

/// First induced `P_k` that closes to no induced cycle.
pub fn first_unclosable_induced_path(g: &Graph, k: usize) -> Result<Option<InducedPath>> {
    for p in induced_paths(g, k) {
        if close_extension(g, &p)?.is_none() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::fixtures::{load_fixture, petersen};

    #[test]
    fn petersen_passes() {
        let r = verify_transitive_corollaries(&petersen()).unwrap();
        assert!(r.vertex_transitive && r.edge_transitive && r.holds());
        assert_eq!(r.induced_p3.unwrap().checked, 30);
    }

    #[test]
    fn prism_p3_only() {
        let f = load_fixture("fig3_prism").unwrap();
        let r = verify_transitive_corollaries(&f.graph).unwrap();
        assert!(r.vertex_transitive && !r.edge_transitive && r.holds());
        assert!(close_extension(&f.graph, &f.paths[0]).unwrap().is_none());
    }

    #[test]
    fn circulant_p4_but_not_p5() {
        let f = load_fixture("fig5_circulant").unwrap();
        let r = verify_transitive_corollaries(&f.graph).unwrap();
        assert!(r.edge_transitive && r.holds());
        assert!(close_extension(&f.graph, &f.paths[0]).unwrap().is_none());
    }

    #[test]
    fn longer_paths_in_k23() {
        let k23 = load_fixture("fig1b").unwrap().graph;
        assert!(check_paths_close_to_cycles(&k23, 3).passed());
        let four = check_paths_close_to_cycles(&k23, 4);
        assert!(!four.passed());
    }
}
