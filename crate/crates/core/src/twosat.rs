//! 2-SAT via strongly connected components of the implication graph.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Lit { var: self.var, positive: !self.positive }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwoSatInstance {
    vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatInstance {
    pub fn new(vars: usize) -> Self {
        TwoSatInstance { vars, clauses: Vec::new() }
    }

    /// Adds the clause `a ∨ b`.
    pub fn add_clause(&mut self, a: Lit, b: Lit) -> Result<()> {
        for l in [a, b] {
            if l.var >= self.vars {
                return Err(Error::LiteralOutOfRange { var: l.var, count: self.vars });
            }
        }
        self.clauses.push((a, b));
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars
            && self.clauses.iter().all(|&(a, b)| a.holds(assignment) || b.holds(assignment))
    }
}

/// A satisfying assignment, or `None` if the instance is unsatisfiable.
pub fn two_sat_solve(inst: &TwoSatInstance) -> Option<Vec<bool>> {
    let nodes = 2 * inst.vars;
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &inst.clauses {
        adj[a.negated().node()].push(b.node());
        adj[b.negated().node()].push(a.node());
    }
    let comp = tarjan_scc(&adj);
    (0..inst.vars)
        .map(|v| {
            let (t, f) = (comp[2 * v], comp[2 * v + 1]);
            // Tarjan numbers components in reverse topological order.
            (t != f).then_some(t < f)
        })
        .collect()
}

/// Iterative Tarjan; component ids are assigned sinks first.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let (mut next_index, mut next_comp) = (0, 0);

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge == 0 && index[v] == UNSEEN {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
