//! Extremal families that certify tightness of the bounds.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid construction parameters: {0}")]
pub struct ConstructionError(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, ConstructionError> {
    Err(ConstructionError(msg.into()))
}

fn check_order(n: usize) -> Result<(), ConstructionError> {
    if n > MAX_VERTICES {
        return fail(format!("n = {n} exceeds {MAX_VERTICES}"));
    }
    Ok(())
}

fn graph(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("construction produces a valid simple graph")
}

fn clique_edges(vertices: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vertices.iter().enumerate().flat_map(move |(i, &u)| vertices[i + 1..].iter().map(move |&v| (u, v)))
}

/// `H(n, k, c)`: a clique on `{0, …, c-k-1}` plus vertices `c-k, …, n-1`,
/// each joined to exactly `{0, …, k-1}`.
pub fn build_hnkc(n: usize, k: usize, c: usize) -> Result<Graph, ConstructionError> {
    if !(c > k && k >= 1) {
        return fail(format!("H(n,k,c) needs c > k >= 1, got k = {k}, c = {c}"));
    }
    let core = c - k;
    if n < core {
        return fail(format!("H(n,k,c) needs n >= c - k, got n = {n}, c - k = {core}"));
    }
    if k > core {
        return fail(format!("H(n,k,c) attaches to k = {k} of only {core} clique vertices"));
    }
    check_order(n)?;
    let clique: Vec<usize> = (0..core).collect();
    let mut edges: Vec<_> = clique_edges(&clique).collect();
    edges.extend((core..n).flat_map(|x| (0..k).map(move |a| (a, x))));
    Ok(graph(n, edges))
}

/// `n / (l-1)` disjoint copies of `K_{l-1}`.
pub fn build_disjoint_cliques(n: usize, l: usize) -> Result<Graph, ConstructionError> {
    if l < 2 {
        return fail(format!("disjoint cliques need l >= 2, got {l}"));
    }
    if !n.is_multiple_of(l - 1) {
        return fail(format!("l - 1 = {} does not divide n = {n}", l - 1));
    }
    check_order(n)?;
    let blocks: Vec<Vec<usize>> = (0..n / (l - 1)).map(|b| (b * (l - 1)..(b + 1) * (l - 1)).collect()).collect();
    let edges = blocks.iter().flat_map(|b| clique_edges(b)).collect();
    Ok(graph(n, edges))
}

/// `(n-1) / (l-2)` copies of `K_{l-1}` sharing vertex 0 and otherwise disjoint.
pub fn build_shared_vertex_cliques(n: usize, l: usize) -> Result<Graph, ConstructionError> {
    if l < 3 {
        return fail(format!("shared-vertex cliques need l >= 3, got {l}"));
    }
    if n == 0 || !(n - 1).is_multiple_of(l - 2) {
        return fail(format!("l - 2 = {} does not divide n - 1 for n = {n}", l - 2));
    }
    check_order(n)?;
    let blocks: Vec<Vec<usize>> = (0..(n - 1) / (l - 2))
        .map(|b| std::iter::once(0).chain(1 + b * (l - 2)..1 + (b + 1) * (l - 2)).collect())
        .collect();
    let edges = blocks.iter().flat_map(|b| clique_edges(b)).collect();
    Ok(graph(n, edges))
}

/// `K_{n-2}` on `{0, …, n-3}` with pendant vertices `n-2` and `n-1` both
/// attached to vertex 0.
pub fn build_clique_plus_pendants(n: usize) -> Result<Graph, ConstructionError> {
    if n < 5 {
        return fail(format!("clique plus pendants needs n >= 5, got {n}"));
    }
    check_order(n)?;
    let clique: Vec<usize> = (0..n - 2).collect();
    let mut edges: Vec<_> = clique_edges(&clique).collect();
    edges.extend([(0, n - 2), (0, n - 1)]);
    Ok(graph(n, edges))
}

/// One member of an extremal family, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructionSpec {
    Hnkc { n: usize, k: usize, c: usize },
    DisjointCliques { n: usize, l: usize },
    SharedVertexCliques { n: usize, l: usize },
    CliquePlusPendants { n: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match *self {
            ConstructionSpec::Hnkc { n, k, c } => build_hnkc(n, k, c),
            ConstructionSpec::DisjointCliques { n, l } => build_disjoint_cliques(n, l),
            ConstructionSpec::SharedVertexCliques { n, l } => build_shared_vertex_cliques(n, l),
            ConstructionSpec::CliquePlusPendants { n } => build_clique_plus_pendants(n),
        }
    }

    /// Named integer parameters, e.g. `[("n", 10), ("k", 2), ("c", 6)]`.
    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match *self {
            ConstructionSpec::Hnkc { n, k, c } => vec![("n", n as i64), ("k", k as i64), ("c", c as i64)],
            ConstructionSpec::DisjointCliques { n, l } | ConstructionSpec::SharedVertexCliques { n, l } => {
                vec![("n", n as i64), ("l", l as i64)]
            }
            ConstructionSpec::CliquePlusPendants { n } => vec![("n", n as i64)],
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ConstructionSpec::Hnkc { .. } => "hnkc",
            ConstructionSpec::DisjointCliques { .. } => "disjoint-cliques",
            ConstructionSpec::SharedVertexCliques { .. } => "shared-cliques",
            ConstructionSpec::CliquePlusPendants { .. } => "clique-pendants",
        }
    }

    /// Builds a spec from a kind name and named parameters.
    pub fn from_parts(kind: &str, get: impl Fn(&str) -> Option<i64>) -> Result<Self, ConstructionError> {
        let need = |name: &str| -> Result<usize, ConstructionError> {
            let v = get(name).ok_or_else(|| ConstructionError(format!("{kind} needs parameter {name}")))?;
            usize::try_from(v).map_err(|_| ConstructionError(format!("{name} must be nonnegative")))
        };
        Ok(match kind {
            "hnkc" => ConstructionSpec::Hnkc { n: need("n")?, k: need("k")?, c: need("c")? },
            "disjoint-cliques" => ConstructionSpec::DisjointCliques { n: need("n")?, l: need("l")? },
            "shared-cliques" => ConstructionSpec::SharedVertexCliques { n: need("n")?, l: need("l")? },
            "clique-pendants" => ConstructionSpec::CliquePlusPendants { n: need("n")? },
            other => return fail(format!("unknown construction {other:?}")),
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind_name())?;
        for (i, (k, v)) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::clique_profile;
    use crate::paths::{circumference, longest_path, SearchLimits};
    use num_bigint::BigUint;

    #[test]
    fn hnkc_examples() {
        let h = build_hnkc(10, 2, 6).unwrap();
        assert_eq!((h.n(), h.m()), (10, 18));
        assert_eq!(build_hnkc(4, 2, 6).unwrap(), Graph::complete(4).unwrap());
        let h = build_hnkc(12, 3, 7).unwrap();
        assert_eq!(clique_profile(&h).unwrap().count(3), BigUint::from(28u8));
        assert!(build_hnkc(10, 3, 3).is_err());
        assert!(build_hnkc(3, 2, 6).is_err());
        assert!(build_hnkc(10, 0, 6).is_err());
    }

    #[test]
    fn disjoint_clique_examples() {
        let g = build_disjoint_cliques(9, 4).unwrap();
        assert_eq!(g.m(), 9);
        assert_eq!(build_disjoint_cliques(6, 2).unwrap(), Graph::empty(6).unwrap());
        let g = build_disjoint_cliques(8, 5).unwrap();
        assert_eq!(g.m(), 12);
        assert!(build_disjoint_cliques(7, 4).is_err());
    }

    #[test]
    fn shared_vertex_clique_examples() {
        let g = build_shared_vertex_cliques(7, 5).unwrap();
        assert_eq!(g.m(), 12);
        let (c, _) = circumference(&g, &SearchLimits::default()).unwrap();
        assert_eq!(c, 4);
        assert_eq!(build_shared_vertex_cliques(4, 5).unwrap(), Graph::complete(4).unwrap());
        // 3 does not divide 8.
        assert!(build_shared_vertex_cliques(9, 5).is_err());
    }

    #[test]
    fn clique_plus_pendant_examples() {
        let lim = SearchLimits::default();
        let g = build_clique_plus_pendants(10).unwrap();
        assert_eq!(longest_path(&g, &lim).unwrap().0, 8);
        let g = build_clique_plus_pendants(5).unwrap();
        assert_eq!(g.m(), 5);
        assert_eq!(longest_path(&g, &lim).unwrap().0, 3);
        assert!(build_clique_plus_pendants(4).is_err());
    }

    #[test]
    fn spec_roundtrip() {
        let s = ConstructionSpec::Hnkc { n: 10, k: 2, c: 6 };
        assert_eq!(s.to_string(), "hnkc(n=10,k=2,c=6)");
        let p = s.params();
        let back = ConstructionSpec::from_parts("hnkc", |k| p.iter().find(|(n, _)| *n == k).map(|x| x.1)).unwrap();
        assert_eq!(back, s);
        assert_eq!(s.build().unwrap(), build_hnkc(10, 2, 6).unwrap());
    }
}
