//! Integer max flow (Dinic) with min-cut recovery.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, u64)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes {
            return Err(Error::InvalidNetwork(format!(
                "terminals {source}, {sink} outside {nodes} nodes"
            )));
        }
        if source == sink {
            return Err(Error::InvalidNetwork("source equals sink".into()));
        }
        Ok(FlowNetwork { nodes, source, sink, arcs: Vec::new() })
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> Result<()> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::InvalidNetwork(format!("arc {from}->{to} out of range")));
        }
        self.arcs.push((from, to, capacity));
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, u64)] {
        &self.arcs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u64,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

struct Residual {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let mut r = Residual { head: vec![Vec::new(); net.nodes], to: Vec::new(), cap: Vec::new() };
        for &(u, v, c) in &net.arcs {
            // Arc 2k is forward, 2k + 1 its reverse.
            r.head[u].push(r.to.len());
            r.to.push(v);
            r.cap.push(c);
            r.head[v].push(r.to.len());
            r.to.push(u);
            r.cap.push(0);
        }
        r
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.head[u].len() {
            let a = self.head[u][next[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(self.cap[a]), level, next);
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }
}

pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    let mut r = Residual::new(net);
    let (s, t) = (net.source, net.sink);
    let mut value: u64 = 0;
    loop {
        let level = r.levels(s);
        if level[t] == usize::MAX {
            let source_side = level.iter().map(|&l| l != usize::MAX).collect();
            return MaxFlow { value, source_side };
        }
        let mut next = vec![0; net.nodes];
        loop {
            let pushed = r.augment(s, t, u64::MAX, &level, &mut next);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
}
