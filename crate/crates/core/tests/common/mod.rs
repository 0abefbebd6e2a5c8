#![allow(dead_code)]

use cliquepath::harness::graph_from_mask;
use cliquepath::Graph;
use cliquepath_oracle::Matrix;
use proptest::prelude::*;

pub fn matrix(g: &Graph) -> Matrix {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    cliquepath_oracle::matrix(g.n(), &edges)
}

/// Any labeled graph on `lo..=hi` vertices.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        let max = if pairs == 0 { 0 } else { (1u64 << pairs) - 1 };
        (0..=max).prop_map(move |mask| graph_from_mask(n, mask))
    })
}

/// Graphs on `lo..=hi` vertices with edge density drawn per case, so both
/// sparse and dense graphs show up.
pub fn graphs_any_density(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| cliquepath::harness::sample_gnp(n, p, seed).unwrap())
}
