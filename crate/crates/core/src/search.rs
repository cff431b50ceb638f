//! Graph search orderings: LBFS by partition refinement, maximum cardinality
//! search, the exhaustive end-vertex enumerators, and the avoidable pairs
//! extracted from double LBFS sweeps.
//!
//! Ties are always broken towards the smallest vertex id. On disconnected
//! graphs both searches finish a component before starting the next one, and
//! the next component is entered at its smallest vertex.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distances_from, eccentricity, BitIter, Graph};

/// Default vertex bound for the exponential end-vertex enumerators.
pub const END_VERTEX_BOUND: usize = 10;

/// A permutation of `0..n` together with its inverse.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct VertexOrdering {
    sequence: Vec<usize>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range 0..{n}")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            position[v] = i;
        }
        Ok(VertexOrdering { sequence, position })
    }

    /// Checks that this ordering covers exactly the vertices of `g`.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::InvalidOrdering(format!(
                "ordering has {} vertices, graph has {}",
                self.len(),
                g.n()
            )))
        }
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn first(&self) -> usize {
        self.sequence[0]
    }

    pub fn last(&self) -> usize {
        self.sequence[self.sequence.len() - 1]
    }

    /// `u` comes before `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }

    pub fn reversed(&self) -> Self {
        let sequence: Vec<usize> = self.sequence.iter().rev().copied().collect();
        let n = sequence.len();
        let position = self.position.iter().map(|&p| n - 1 - p).collect();
        VertexOrdering { sequence, position }
    }
}

const NIL: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Class {
    head: usize,
    tail: usize,
    len: usize,
    prev: usize,
    next: usize,
    split_stamp: usize,
    split_into: usize,
}

/// Ordered partition of the unvisited vertices; each class is a linked list
/// kept in ascending id order so that the head is the tie-break choice.
struct Partition {
    classes: Vec<Class>,
    first: usize,
    class_of: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
}

impl Partition {
    fn new(initial: &[usize], n: usize) -> Self {
        let mut next = vec![NIL; n];
        let mut prev = vec![NIL; n];
        for w in initial.windows(2) {
            next[w[0]] = w[1];
            prev[w[1]] = w[0];
        }
        Partition {
            classes: vec![Class {
                head: initial[0],
                tail: initial[initial.len() - 1],
                len: initial.len(),
                prev: NIL,
                next: NIL,
                split_stamp: NIL,
                split_into: NIL,
            }],
            first: 0,
            class_of: vec![0; n],
            next,
            prev,
        }
    }

    fn unlink_vertex(&mut self, v: usize) {
        let c = self.class_of[v];
        let (p, nx) = (self.prev[v], self.next[v]);
        if p == NIL {
            self.classes[c].head = nx;
        } else {
            self.next[p] = nx;
        }
        if nx == NIL {
            self.classes[c].tail = p;
        } else {
            self.prev[nx] = p;
        }
        self.classes[c].len -= 1;
        if self.classes[c].len == 0 {
            self.unlink_class(c);
        }
    }

    fn unlink_class(&mut self, c: usize) {
        let Class { prev, next, .. } = self.classes[c];
        if prev == NIL {
            self.first = next;
        } else {
            self.classes[prev].next = next;
        }
        if next != NIL {
            self.classes[next].prev = prev;
        }
    }

    fn push_back(&mut self, c: usize, v: usize) {
        let tail = self.classes[c].tail;
        self.prev[v] = tail;
        self.next[v] = NIL;
        if tail == NIL {
            self.classes[c].head = v;
        } else {
            self.next[tail] = v;
        }
        self.classes[c].tail = v;
        self.classes[c].len += 1;
        self.class_of[v] = c;
    }

    /// New empty class placed immediately before `c`.
    fn insert_before(&mut self, c: usize) -> usize {
        let id = self.classes.len();
        let prev = self.classes[c].prev;
        self.classes.push(Class {
            head: NIL,
            tail: NIL,
            len: 0,
            prev,
            next: c,
            split_stamp: NIL,
            split_into: NIL,
        });
        if prev == NIL {
            self.first = id;
        } else {
            self.classes[prev].next = id;
        }
        self.classes[c].prev = id;
        id
    }
}

/// Lexicographic breadth-first search in O(n + m).
pub fn lbfs(g: &Graph, start: Option<usize>) -> Result<VertexOrdering> {
    let n = g.n();
    let mut initial: Vec<usize> = Vec::with_capacity(n);
    if let Some(s) = start {
        g.check_vertex(s)?;
        initial.push(s);
        initial.extend((0..n).filter(|&v| v != s));
    } else {
        initial.extend(0..n);
    }
    let mut part = Partition::new(&initial, n);
    let mut visited = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    for step in 0..n {
        let pivot = part.classes[part.first].head;
        part.unlink_vertex(pivot);
        visited[pivot] = true;
        sequence.push(pivot);
        for &w in g.neighbors(pivot) {
            if visited[w] {
                continue;
            }
            let c = part.class_of[w];
            let target = if part.classes[c].split_stamp == step {
                part.classes[c].split_into
            } else {
                let fresh = part.insert_before(c);
                part.classes[c].split_stamp = step;
                part.classes[c].split_into = fresh;
                fresh
            };
            part.unlink_vertex(w);
            part.push_back(target, w);
        }
    }
    Ok(VertexOrdering {
        position: invert(&sequence),
        sequence,
    })
}

/// Maximum cardinality search: repeatedly visit an unvisited vertex with the
/// most visited neighbors.
pub fn mcs(g: &Graph, start: Option<usize>) -> Result<VertexOrdering> {
    let n = g.n();
    if let Some(s) = start {
        g.check_vertex(s)?;
    }
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(0..n);
    let mut count = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut top = 0;
    let mut sequence = Vec::with_capacity(n);
    for step in 0..n {
        let v = match start {
            Some(s) if step == 0 => s,
            _ => {
                while buckets[top].is_empty() {
                    top -= 1;
                }
                *buckets[top].first().unwrap()
            }
        };
        buckets[count[v]].remove(&v);
        visited[v] = true;
        sequence.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                buckets[count[w]].remove(&w);
                count[w] += 1;
                buckets[count[w]].insert(w);
                top = top.max(count[w]);
            }
        }
    }
    Ok(VertexOrdering {
        position: invert(&sequence),
        sequence,
    })
}

fn invert(sequence: &[usize]) -> Vec<usize> {
    let mut position = vec![0; sequence.len()];
    for (i, &v) in sequence.iter().enumerate() {
        position[v] = i;
    }
    position
}

fn check_enumeration_bound(g: &Graph, bound: usize) -> Result<Vec<u64>> {
    if g.n() > bound || g.n() > 64 {
        return Err(Error::BoundExceeded {
            what: "exhaustive search enumeration (vertices)",
            bound: bound.min(64),
            actual: g.n(),
        });
    }
    Ok(g.masks().expect("n <= 64"))
}

/// Every vertex that some LBFS execution (any start, any tie-break) visits
/// last. Exponential; limited to `bound` vertices.
pub fn lbfs_end_vertices(g: &Graph, bound: usize) -> Result<BTreeSet<usize>> {
    let masks = check_enumeration_bound(g, bound)?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut memo = HashMap::new();
    let ends = lbfs_ends_from(&masks, vec![all], &mut memo);
    Ok(BitIter(ends).collect())
}

/// `lbfs_end_vertices` with the default bound.
pub fn lbfs_all_end_vertices(g: &Graph) -> Result<BTreeSet<usize>> {
    lbfs_end_vertices(g, END_VERTEX_BOUND)
}

/// The future of an LBFS run depends only on the ordered partition of the
/// unvisited vertices into label classes (highest label first).
fn lbfs_ends_from(masks: &[u64], partition: Vec<u64>, memo: &mut HashMap<Vec<u64>, u64>) -> u64 {
    if partition.len() == 1 && partition[0].count_ones() == 1 {
        return partition[0];
    }
    if let Some(&ends) = memo.get(&partition) {
        return ends;
    }
    let mut ends = 0;
    for v in BitIter(partition[0]) {
        let mut refined = Vec::with_capacity(partition.len() + 1);
        for (i, &class) in partition.iter().enumerate() {
            let class = if i == 0 { class & !(1 << v) } else { class };
            let (hit, miss) = (class & masks[v], class & !masks[v]);
            refined.extend([hit, miss].into_iter().filter(|&c| c != 0));
        }
        ends |= lbfs_ends_from(masks, refined, memo);
    }
    memo.insert(partition, ends);
    ends
}

/// Every vertex that some MCS execution visits last.
pub fn mcs_end_vertices(g: &Graph, bound: usize) -> Result<BTreeSet<usize>> {
    let masks = check_enumeration_bound(g, bound)?;
    let mut memo = HashMap::new();
    let ends = mcs_ends_from(&masks, 0, &mut memo);
    Ok(BitIter(ends).collect())
}

/// `mcs_end_vertices` with the default bound.
pub fn mcs_all_end_vertices(g: &Graph) -> Result<BTreeSet<usize>> {
    mcs_end_vertices(g, END_VERTEX_BOUND)
}

fn mcs_ends_from(masks: &[u64], visited: u64, memo: &mut HashMap<u64, u64>) -> u64 {
    let n = masks.len();
    let unvisited = !visited & if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if unvisited.count_ones() == 1 {
        return unvisited;
    }
    if let Some(&ends) = memo.get(&visited) {
        return ends;
    }
    let best = BitIter(unvisited)
        .map(|v| (masks[v] & visited).count_ones())
        .max()
        .unwrap();
    let mut ends = 0;
    for v in BitIter(unvisited).filter(|&v| (masks[v] & visited).count_ones() == best) {
        ends |= mcs_ends_from(masks, visited | 1 << v, memo);
    }
    memo.insert(visited, ends);
    ends
}

/// Two distinct avoidable vertices in linear time: `a` ends an LBFS from
/// vertex 0, `b` ends an LBFS started at `a`.
pub fn two_avoidable(g: &Graph) -> Result<(usize, usize)> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            actual: g.n(),
        });
    }
    let a = lbfs(g, None)?.last();
    let b = lbfs(g, Some(a))?.last();
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiametralPair {
    pub a: usize,
    pub b: usize,
    pub distance: usize,
}

/// Two avoidable vertices at distance `diam(g)`: start a double LBFS sweep at
/// a vertex of maximum eccentricity (smallest id among ties).
pub fn diametral_avoidable_pair(g: &Graph) -> Result<DiametralPair> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            actual: g.n(),
        });
    }
    let mut best = (0, 0);
    for v in g.vertices() {
        let e = eccentricity(g, v).ok_or(Error::Disconnected)?;
        if e > best.1 {
            best = (v, e);
        }
    }
    let a = lbfs(g, Some(best.0))?.last();
    let b = lbfs(g, Some(a))?.last();
    let distance = distances_from(g, a)[b].expect("connected");
    Ok(DiametralPair { a, b, distance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::diameter;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn fig1a() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 4), (4, 5), (2, 3)]).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    /// Reference LBFS that keeps explicit labels, O(n^2) per step.
    fn naive_lbfs(g: &Graph, start: Option<usize>) -> Vec<usize> {
        let n = g.n();
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
        if let Some(s) = start {
            labels[s].push(n + 1);
        }
        let mut visited = vec![false; n];
        let mut order = Vec::new();
        for i in 1..=n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
                .unwrap();
            visited[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                if !visited[w] {
                    labels[w].push(n - i);
                }
            }
        }
        order
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![2, 0, 1]).is_ok());
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 0);
        assert!(o.precedes(0, 1));
        let r = o.reversed();
        assert_eq!(r.sequence(), &[1, 0, 2]);
        assert_eq!(r.position(1), 0);
    }

    #[test]
    fn lbfs_matches_label_reference() {
        let graphs = [fig1a(), k23(), cycle(7), path(6), complete(5)];
        for g in &graphs {
            assert_eq!(lbfs(g, None).unwrap().sequence(), naive_lbfs(g, None).as_slice());
            for s in g.vertices() {
                assert_eq!(
                    lbfs(g, Some(s)).unwrap().sequence(),
                    naive_lbfs(g, Some(s)).as_slice()
                );
            }
        }
    }

    #[test]
    fn lbfs_basic() {
        let k5 = complete(5);
        assert_eq!(lbfs(&k5, None).unwrap(), lbfs(&k5, None).unwrap());
        assert_eq!(lbfs(&k5, None).unwrap().sequence(), &[0, 1, 2, 3, 4]);
        let p4 = path(4);
        assert_eq!(lbfs(&p4, Some(0)).unwrap().sequence(), &[0, 1, 2, 3]);
        assert_eq!(lbfs(&p4, Some(3)).unwrap().last(), 0);
        assert!(lbfs(&p4, Some(4)).is_err());
    }

    #[test]
    fn lbfs_disconnected_components_in_order() {
        let g = Graph::from_edges(6, [(4, 5), (0, 3), (1, 2)]).unwrap();
        assert_eq!(lbfs(&g, None).unwrap().sequence(), &[0, 3, 1, 2, 4, 5]);
        assert_eq!(lbfs(&g, Some(5)).unwrap().sequence(), &[5, 4, 0, 3, 1, 2]);
    }

    #[test]
    fn mcs_examples() {
        let k4 = complete(4);
        assert_eq!(mcs(&k4, None).unwrap(), mcs(&k4, None).unwrap());
        // From the middle of P5 the counters force both branches outward.
        let p5 = path(5);
        let order = mcs(&p5, Some(2)).unwrap();
        assert_eq!(order.sequence(), &[2, 1, 0, 3, 4]);
        let tail: BTreeSet<usize> = order.sequence()[3..].iter().copied().collect();
        assert!(tail.contains(&4));
        assert!(mcs(&p5, Some(9)).is_err());
    }

    #[test]
    fn end_vertex_enumeration() {
        // The pendant vertex 3 is never an LBFS end vertex.
        let ends = lbfs_all_end_vertices(&fig1a()).unwrap();
        assert_eq!(ends, BTreeSet::from([0, 5]));
        assert_eq!(lbfs_all_end_vertices(&complete(4)).unwrap().len(), 4);
        assert_eq!(lbfs_all_end_vertices(&cycle(5)).unwrap().len(), 5);

        let mcs_ends = mcs_all_end_vertices(&k23()).unwrap();
        assert_eq!(mcs_ends, BTreeSet::from([2, 3, 4]));

        let big = path(11);
        assert!(lbfs_all_end_vertices(&big).unwrap_err().is_bound_exceeded());
        assert_eq!(lbfs_end_vertices(&big, 11).unwrap(), BTreeSet::from([0, 10]));
    }

    #[test]
    fn deterministic_ordering_is_among_enumerated_ends() {
        for g in [fig1a(), k23(), cycle(6), path(5)] {
            let ends = lbfs_all_end_vertices(&g).unwrap();
            let mcs_ends = mcs_all_end_vertices(&g).unwrap();
            for s in g.vertices() {
                assert!(ends.contains(&lbfs(&g, Some(s)).unwrap().last()));
                assert!(mcs_ends.contains(&mcs(&g, Some(s)).unwrap().last()));
            }
        }
    }

    #[test]
    fn avoidable_pairs() {
        assert_eq!(two_avoidable(&complete(2)).unwrap(), (1, 0));
        let (a, b) = two_avoidable(&path(5)).unwrap();
        assert_eq!(BTreeSet::from([a, b]), BTreeSet::from([0, 4]));
        assert!(two_avoidable(&Graph::new(1).unwrap()).is_err());

        for n in 2..8 {
            let pair = diametral_avoidable_pair(&path(n)).unwrap();
            assert_eq!(BTreeSet::from([pair.a, pair.b]), BTreeSet::from([0, n - 1]));
            assert_eq!(pair.distance, n - 1);
        }
        let pair = diametral_avoidable_pair(&complete(4)).unwrap();
        assert_eq!(pair.distance, 1);
        assert_ne!(pair.a, pair.b);
        let g = fig1a();
        assert_eq!(diametral_avoidable_pair(&g).unwrap().distance, diameter(&g).unwrap());
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(diametral_avoidable_pair(&split).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn lbfs_is_a_bfs() {
        let g = Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)])
            .unwrap();
        for s in g.vertices() {
            let order = lbfs(&g, Some(s)).unwrap();
            let dist = distances_from(&g, s);
            let seq: Vec<usize> = order.sequence().iter().map(|&v| dist[v].unwrap()).collect();
            assert!(seq.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
