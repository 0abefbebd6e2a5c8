//! Exact clique counts `N_j(G)` for every `1 ≤ j ≤ ω(G)`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::graph::Graph;

/// Default cap on the number of enumeration nodes (one node per clique).
pub const DEFAULT_CLIQUE_BUDGET: u64 = 1_000_000_000;

/// `counts[j - 1] = N_j(G)`; `counts.len() == ω(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueProfile {
    counts: Vec<BigUint>,
}

impl CliqueProfile {
    pub fn omega(&self) -> usize {
        self.counts.len()
    }

    /// `N_j`, with `N_0 = 1` and `N_j = 0` above the clique number.
    pub fn count(&self, j: usize) -> BigUint {
        match j {
            0 => BigUint::from(1u8),
            j if j <= self.counts.len() => self.counts[j - 1].clone(),
            _ => BigUint::default(),
        }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }
}

impl Serialize for CliqueProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CliqueProfile", 2)?;
        st.serialize_field("omega", &self.omega())?;
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        st.serialize_field("counts", &counts)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CliqueProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            omega: usize,
            counts: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let counts = raw
            .counts
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if counts.len() != raw.omega {
            return Err(serde::de::Error::custom("omega does not match counts length"));
        }
        Ok(CliqueProfile { counts })
    }
}

pub fn clique_profile(g: &Graph) -> Result<CliqueProfile, AnalysisError> {
    clique_profile_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

pub fn clique_profile_with_budget(g: &Graph, budget: u64) -> Result<CliqueProfile, AnalysisError> {
    let mut counter = Counter { adj: g.adjacency(), counts: vec![0; g.n() + 1], nodes: 0, budget };
    if !counter.extend(g.vertices().bits(), 1) {
        return Err(AnalysisError::BudgetExceeded { what: "clique enumeration", graph6: g.to_graph6(), limit: budget });
    }
    let omega = counter.counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    Ok(CliqueProfile { counts: counter.counts[1..=omega].iter().map(|&c| BigUint::from(c)).collect() })
}

struct Counter<'a> {
    adj: &'a [u64],
    counts: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Counter<'_> {
    /// Each clique is reached once: it is grown in ascending vertex order,
    /// and `cand` only ever holds vertices above the current maximum.
    fn extend(&mut self, mut cand: u64, size: usize) -> bool {
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            self.counts[size] += 1;
            let next = cand & self.adj[v];
            if next != 0 && !self.extend(next, size + 1) {
                return false;
            }
        }
        true
    }
}

/// `Σ_x N_{k-1}(G[N(x)])`, evaluated directly on every neighborhood
/// subgraph. Double counting gives `k · N_k(G)`.
pub fn neighborhood_clique_sum(g: &Graph, k: usize) -> Result<BigUint, AnalysisError> {
    if k < 2 {
        return Err(AnalysisError::Domain(format!("k must be at least 2, got {k}")));
    }
    let mut total = BigUint::default();
    for x in 0..g.n() {
        let gx = g.neighborhood_subgraph(x).expect("x is a vertex");
        total += clique_profile(&gx)?.count(k - 1);
    }
    Ok(total)
}
