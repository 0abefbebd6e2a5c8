//! Immutable simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is one `u64` bitset per vertex. Every transformation returns a
//! fresh value, so graphs can be shared freely between worker threads.

use std::fmt;

use thiserror::Error;

/// Largest supported order. Keeps graph6 in its one-byte-header form and
/// lets a single machine word hold any vertex set.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs with {n} vertices are unsupported (maximum is {MAX_VERTICES})")]
    UnsupportedSize { n: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A set of vertex indices of some host graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, …, n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iteration over the members of a [`VertexSet`].
#[derive(Debug, Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    pub two_connected: bool,
}

/// Result of iterated low-degree deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disintegration {
    /// Induced subgraph on the survivors, relabeled in ascending order.
    pub graph: Graph,
    /// Survivors as original vertex labels.
    pub survivors: VertexSet,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n], m: 0 })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let mask = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::VertexOutOfRange { vertex: u, n });
                }
            }
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { adj, m }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        Ok(Self::from_adjacency_unchecked((0..n).map(|v| full & !(1 << v)).collect()))
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::UnsupportedSize { n });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `0-1-…-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Self::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("static graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency rows, one bitmask per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, grouped by `v` ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |v| VertexSet(self.adj[v] & ((1u64 << v) - 1)).iter().map(move |u| (u, v)))
    }

    /// Minimum degree δ(G); `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).max()
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Self::from_adjacency_unchecked(adj))
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Self, GraphError> {
        let n = self.n();
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(n);
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let members: Vec<usize> = s.iter().collect();
        let adj = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] >> w & 1 == 1)
                    .fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// `G[N(v)]`, relabeled in ascending order of the neighbors.
    pub fn neighborhood_subgraph(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        self.induced_subgraph(self.neighbors(v))
    }

    /// `G ∨ H`: vertices of `self` keep their labels, those of `other` are
    /// shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let (a, b) = (self.n(), other.n());
        check_order(a + b)?;
        let left = VertexSet::full(a).bits();
        let right = VertexSet::full(b).bits() << a;
        let adj = self.adj.iter().map(|&r| r | right).chain(other.adj.iter().map(|&r| (r << a) | left)).collect();
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within.0 & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(s) => self.component_of(s, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() >= 1 && self.is_connected_within(self.vertices())
    }

    pub fn connectivity_profile(&self) -> Connectivity {
        let all = self.vertices();
        let connected = self.is_connected();
        let two_connected =
            connected && self.n() >= 3 && (0..self.n()).all(|v| self.is_connected_within(all.without(v)));
        Connectivity { connected, two_connected }
    }

    /// Repeatedly deletes every vertex of degree at most `alpha` until none
    /// remains. Deletion happens in rounds; the fixpoint does not depend on
    /// the order.
    pub fn disintegrate(&self, alpha: usize) -> Disintegration {
        let mut alive = self.vertices();
        loop {
            let doomed: VertexSet =
                alive.iter().filter(|&v| (self.adj[v] & alive.0).count_ones() as usize <= alpha).collect();
            if doomed.is_empty() {
                break;
            }
            alive = alive.difference(doomed);
        }
        Disintegration { graph: self.induced_subgraph(alive).expect("survivors are host vertices"), survivors: alive }
    }

    pub fn parse_graph6(text: &str) -> Result<Self, GraphError> {
        crate::io::parse_graph6(text)
    }

    pub fn to_graph6(&self) -> String {
        crate::io::to_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n={}, m={})", self.to_graph6(), self.n(), self.m)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::UnsupportedSize { n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    #[test]
    fn invariants_of_builders() {
        for g in [Graph::complete(6).unwrap(), Graph::petersen(), Graph::complete_bipartite(2, 3).unwrap(), c5()] {
            let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.m());
            for v in 0..g.n() {
                assert!(!g.has_edge(v, v));
                for u in g.neighbors(v) {
                    assert!(g.has_edge(u, v));
                }
            }
        }
        assert_eq!(Graph::petersen().m(), 15);
        assert!(matches!(Graph::empty(63), Err(GraphError::UnsupportedSize { n: 63 })));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4).unwrap();
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(k4.induced_subgraph(s).unwrap(), Graph::complete(3).unwrap());

        // C_5 restricted to {0,2,4} keeps only the closing edge 4-0.
        let h = c5().induced_subgraph([0, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2)]);

        let e = Graph::petersen().induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!((e.n(), e.m()), (0, 0));

        assert!(matches!(
            k4.induced_subgraph(VertexSet::from_bits(1 << 5)),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 4 })
        ));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(Graph::complete(5).unwrap().neighborhood_subgraph(0).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(c5().neighborhood_subgraph(0).unwrap(), Graph::empty(2).unwrap());
        assert_eq!(Graph::star(3).unwrap().neighborhood_subgraph(0).unwrap(), Graph::empty(3).unwrap());
        assert!(c5().neighborhood_subgraph(5).is_err());
    }

    #[test]
    fn join_examples() {
        let wheel = Graph::cycle(4).unwrap().join(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!((wheel.n(), wheel.m()), (5, 8));
        assert_eq!(
            Graph::complete(2).unwrap().join(&Graph::complete(3).unwrap()).unwrap(),
            Graph::complete(5).unwrap()
        );
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23, Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(k23.m(), 6);
        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.join(&big), Err(GraphError::UnsupportedSize { n: 80 })));
    }

    #[test]
    fn connectivity_examples() {
        let p = |c: Connectivity| (c.connected, c.two_connected);
        assert_eq!(p(c5().connectivity_profile()), (true, true));
        assert_eq!(p(Graph::path(4).unwrap().connectivity_profile()), (true, false));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(p(two_edges.connectivity_profile()), (false, false));
        assert_eq!(p(Graph::complete(2).unwrap().connectivity_profile()), (true, false));
        assert_eq!(p(Graph::empty(0).unwrap().connectivity_profile()), (false, false));
    }

    #[test]
    fn disintegration_examples() {
        let d = c5().disintegrate(2);
        assert_eq!(d.graph.n(), 0);
        assert!(d.survivors.is_empty());
        let d = c5().disintegrate(1);
        assert_eq!(d.graph, c5());
        assert_eq!(d.survivors, VertexSet::full(5));
        // Clique core of H(10,2,6): outside vertices have degree 2 and go
        // first, then the core K_4 has all degrees 3 > 2.
        let h = crate::constructions::build_hnkc(10, 2, 6).unwrap();
        let d = h.disintegrate(2);
        assert_eq!(d.graph, Graph::complete(4).unwrap());
        assert_eq!(d.survivors, VertexSet::full(4));
    }

    #[test]
    fn edge_list_roundtrip_through_edges() {
        let g = Graph::petersen();
        let h = Graph::from_edges(g.n(), g.edges()).unwrap();
        assert_eq!(g, h);
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1))));
    }
}
