use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::graph::{Graph, MAX_VERTICES};
use crate::io::pair_of_index;

/// Largest order enumerated exhaustively in-process (2^21 labeled graphs).
pub const MAX_BUILTIN_ORDER: usize = 7;

/// Identity of the seeded generator behind [`sample_gnp`] and [`GnpStream`].
/// Recorded in every report so a stream can be reproduced.
pub const GENERATOR_ID: &str =
    "ChaCha8 (rand_chacha 0.3, seed_from_u64); one next_u64 per vertex pair in graph6 order; edge iff (x >> 11) * 2^-53 < p";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassFilter {
    #[default]
    All,
    Connected,
    TwoConnected,
}

impl ClassFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Connected => g.is_connected(),
            ClassFilter::TwoConnected => g.connectivity_profile().two_connected,
        }
    }
}

impl FromStr for ClassFilter {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(ClassFilter::All),
            "connected" => Ok(ClassFilter::Connected),
            "2connected" | "two-connected" | "2-connected" => Ok(ClassFilter::TwoConnected),
            other => Err(HarnessError::Config(format!("unknown graph class {other:?}"))),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilter::All => "all",
            ClassFilter::Connected => "connected",
            ClassFilter::TwoConnected => "2connected",
        })
    }
}

/// Graph whose edge set is the bitmask `mask` over vertex pairs in graph6 order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = pair_of_index(i);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Graph::from_adjacency(adj).expect("mask encodes a simple graph")
}

/// Every labeled graph on `n` vertices accepted by `filter`, in ascending
/// edge-bitmask order.
pub fn enumerate_graphs(n: usize, filter: ClassFilter) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > MAX_BUILTIN_ORDER {
        return Err(HarnessError::Config(format!(
            "builtin enumeration stops at n = {MAX_BUILTIN_ORDER}; use a graph6 stream for n = {n}"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(move |mask| graph_from_mask(n, mask)).filter(move |g| filter.accepts(g)))
}

/// Consecutive `G(n, p)` samples drawn from one seeded generator.
pub struct GnpStream {
    rng: ChaCha8Rng,
    n: usize,
    p: f64,
}

impl GnpStream {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, HarnessError> {
        if n > MAX_VERTICES {
            return Err(HarnessError::Config(format!("G(n,p) needs n <= {MAX_VERTICES}, got {n}")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(HarnessError::Config(format!("G(n,p) needs 0 <= p <= 1, got {p}")));
        }
        Ok(GnpStream { rng: ChaCha8Rng::seed_from_u64(seed), n, p })
    }

    pub fn next_graph(&mut self) -> Graph {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; self.n];
        for i in 0..pairs {
            let x = self.rng.next_u64();
            if ((x >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < self.p {
                let (u, v) = pair_of_index(i);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        Graph::from_adjacency(adj).expect("sampled adjacency is simple")
    }
}

impl Iterator for GnpStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        Some(self.next_graph())
    }
}

/// One `G(n, p)` sample; identical arguments give identical graphs.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, HarnessError> {
    Ok(GnpStream::new(n, p, seed)?.next_graph())
}
