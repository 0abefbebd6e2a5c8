//! Exact longest paths, circumference, cycle spectrum and largest wheels.
//!
//! Small graphs go through a subset dynamic program over
//! (visited set, end vertex); larger ones through depth-first branch and
//! bound with reachability pruning. Anything above the configured vertex cap
//! is refused with a budget error rather than answered approximately.
//!
//! Lengths are edge counts throughout; `P_l` has `l` vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::graph::{Graph, VertexSet};

/// The subset tables hold `2^n` words each; past this they stop being cheap.
const DP_HARD_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Largest order handled by the subset dynamic program.
    pub dp_max_n: usize,
    /// Largest order handled at all (branch and bound above `dp_max_n`).
    pub bnb_max_n: usize,
    /// Node cap for branch and bound.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { dp_max_n: 18, bnb_max_n: 24, node_budget: 1_000_000_000 }
    }
}

impl SearchLimits {
    fn use_dp(&self, n: usize) -> bool {
        n <= self.dp_max_n.min(DP_HARD_CAP)
    }

    fn admit(&self, g: &Graph) -> Result<(), AnalysisError> {
        let cap = self.bnb_max_n.max(self.dp_max_n.min(DP_HARD_CAP));
        if g.n() > cap {
            return Err(AnalysisError::BudgetExceeded {
                what: "exact path search vertex cap",
                graph6: g.to_graph6(),
                limit: cap as u64,
            });
        }
        Ok(())
    }
}

/// Set of cycle lengths, as a bitmask over `3..=62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycleSpectrum(u64);

impl CycleSpectrum {
    pub fn contains(self, t: usize) -> bool {
        t < 64 && self.0 >> t & 1 == 1
    }

    pub fn insert(&mut self, t: usize) {
        self.0 |= 1 << t;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        VertexSet::from_bits(self.0).iter()
    }

    /// Whether every `t` with `lo ≤ t ≤ hi` is present (vacuous if `lo > hi`).
    pub fn contains_range(self, lo: usize, hi: usize) -> bool {
        if lo > hi {
            return true;
        }
        if hi >= 64 {
            return false;
        }
        let width = hi - lo + 1;
        let mask = if width == 64 { u64::MAX } else { ((1u64 << width) - 1) << lo };
        self.0 & mask == mask
    }

    /// Largest `t ≥ 2` such that `{3, …, t}` is contained; 2 when 3 is absent.
    pub fn consecutive_from_three(self) -> usize {
        let mut t = 2;
        while self.contains(t + 1) {
            t += 1;
        }
        t
    }
}

impl fmt::Debug for CycleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for CycleSpectrum {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = CycleSpectrum::default();
        for t in iter {
            s.insert(t);
        }
        s
    }
}

impl Serialize for CycleSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for CycleSpectrum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let lengths = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = lengths.iter().find(|&&t| !(3..64).contains(&t)) {
            return Err(serde::de::Error::custom(format!("invalid cycle length {bad}")));
        }
        Ok(lengths.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCycleProfile {
    pub longest_path_edges: usize,
    /// Longest cycle length; 0 for forests.
    pub circumference: usize,
    pub spectrum: CycleSpectrum,
    pub path_witness: Vec<usize>,
    pub cycle_witness: Option<Vec<usize>>,
}

/// A copy of `P_l ∨ K_1`: `path` lies inside the neighborhood of `center`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelWitness {
    pub center: usize,
    pub path: Vec<usize>,
    /// Vertex count of `path`.
    pub l: usize,
}

pub fn is_path(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
        if i > 0 && !g.has_edge(seq[i - 1], v) {
            return false;
        }
    }
    true
}

pub fn is_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3 && is_path(g, seq) && g.has_edge(seq[seq.len() - 1], seq[0])
}

pub fn longest_path(g: &Graph, limits: &SearchLimits) -> Result<(usize, Vec<usize>), AnalysisError> {
    if g.n() == 0 {
        return Err(AnalysisError::Domain("longest path needs at least one vertex".into()));
    }
    limits.admit(g)?;
    let path = if limits.use_dp(g.n()) { longest_path_dp(g) } else { longest_path_bnb(g, limits.node_budget)? };
    assert!(is_path(g, &path), "longest path witness failed validation");
    Ok((path.len() - 1, path))
}

/// Longest cycle length with a witness; `(0, None)` for forests.
pub fn circumference(g: &Graph, limits: &SearchLimits) -> Result<(usize, Option<Vec<usize>>), AnalysisError> {
    let (spectrum, witness) = cycle_structure(g, limits)?;
    Ok((spectrum.max().unwrap_or(0), witness))
}

pub fn cycle_spectrum(g: &Graph, limits: &SearchLimits) -> Result<CycleSpectrum, AnalysisError> {
    Ok(cycle_structure(g, limits)?.0)
}

pub fn path_cycle_profile(g: &Graph, limits: &SearchLimits) -> Result<PathCycleProfile, AnalysisError> {
    let (longest_path_edges, path_witness) = longest_path(g, limits)?;
    let (spectrum, cycle_witness) = cycle_structure(g, limits)?;
    Ok(PathCycleProfile {
        longest_path_edges,
        circumference: spectrum.max().unwrap_or(0),
        spectrum,
        path_witness,
        cycle_witness,
    })
}

/// Cycle spectrum together with a longest cycle (if any).
pub fn cycle_structure(g: &Graph, limits: &SearchLimits) -> Result<(CycleSpectrum, Option<Vec<usize>>), AnalysisError> {
    if g.n() < 3 {
        return Ok((CycleSpectrum::default(), None));
    }
    limits.admit(g)?;
    let out = if limits.use_dp(g.n()) { cycles_dp(g) } else { cycles_bnb(g, limits.node_budget)? };
    if let Some(c) = &out.1 {
        assert!(is_cycle(g, c), "cycle witness failed validation");
        assert_eq!(Some(c.len()), out.0.max());
    }
    Ok(out)
}

/// `P_l ∨ K_1` with `l` maximal; `None` iff the graph has no edge.
pub fn max_wheel(g: &Graph, limits: &SearchLimits) -> Result<Option<WheelWitness>, AnalysisError> {
    let mut best: Option<WheelWitness> = None;
    for v in 0..g.n() {
        let deg = g.degree(v);
        if deg == 0 || best.as_ref().is_some_and(|b| b.l >= deg) {
            continue;
        }
        let members: Vec<usize> = g.neighbors(v).iter().collect();
        let gv = g.neighborhood_subgraph(v)?;
        let (edges, local) = longest_path(&gv, limits)?;
        if best.as_ref().is_none_or(|b| edges + 1 > b.l) {
            best = Some(WheelWitness { center: v, path: local.iter().map(|&i| members[i]).collect(), l: edges + 1 });
        }
    }
    if let Some(w) = &best {
        assert!(is_path(g, &w.path) && w.path.iter().all(|&u| g.has_edge(w.center, u)));
    }
    Ok(best)
}

/// Grows a path from `start` by always stepping to the lowest-indexed
/// unvisited neighbor of the tail, then does the same at the head. The
/// result cannot be extended at either end.
pub fn greedy_maximal_path(g: &Graph, start: usize) -> Vec<usize> {
    let mut path = std::collections::VecDeque::from([start]);
    let mut used = VertexSet::EMPTY.with(start);
    while let Some(u) = g.neighbors(*path.back().unwrap()).difference(used).first() {
        used.insert(u);
        path.push_back(u);
    }
    while let Some(u) = g.neighbors(*path.front().unwrap()).difference(used).first() {
        used.insert(u);
        path.push_front(u);
    }
    path.into()
}

fn or_neighbors(adj: &[u64], set: u64) -> u64 {
    VertexSet::from_bits(set).iter().fold(0, |acc, v| acc | adj[v])
}

fn longest_path_dp(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency();
    let full = VertexSet::full(n).bits();
    // ends[S]: vertices v such that some path visits exactly S and ends at v.
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1usize;
    for s in 1usize..(1 << n) {
        let e = ends[s] as u64;
        if e == 0 {
            continue;
        }
        if s.count_ones() > best.count_ones() {
            best = s;
        }
        let cand = or_neighbors(adj, e) & full & !(s as u64);
        for u in VertexSet::from_bits(cand) {
            ends[s | 1 << u] |= 1 << u;
        }
    }
    let mut set = best;
    let mut v = (ends[set] as u64).trailing_zeros() as usize;
    let mut path = vec![v];
    loop {
        set &= !(1 << v);
        if set == 0 {
            break;
        }
        v = (ends[set] as u64 & adj[v]).trailing_zeros() as usize;
        path.push(v);
    }
    path
}

fn cycles_dp(g: &Graph) -> (CycleSpectrum, Option<Vec<usize>>) {
    let n = g.n();
    let adj = g.adjacency();
    let full = VertexSet::full(n).bits();
    // reach[S]: end vertices of paths that start at min(S) and visit exactly S.
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut spectrum = CycleSpectrum::default();
    let mut longest = 0usize;
    for s in 1usize..(1 << n) {
        let e = reach[s] as u64;
        if e == 0 {
            continue;
        }
        let low = s.trailing_zeros() as usize;
        let size = s.count_ones() as usize;
        if size >= 3 && e & adj[low] != 0 {
            spectrum.insert(size);
            if size > longest.count_ones() as usize {
                longest = s;
            }
        }
        let above = full & !((2u64 << low) - 1);
        let cand = or_neighbors(adj, e) & above & !(s as u64);
        for u in VertexSet::from_bits(cand) {
            reach[s | 1 << u] |= 1 << u;
        }
    }
    if longest == 0 {
        return (spectrum, None);
    }
    let low = longest.trailing_zeros() as usize;
    let mut set = longest;
    let mut v = (reach[set] as u64 & adj[low]).trailing_zeros() as usize;
    let mut cycle = vec![v];
    loop {
        set &= !(1 << v);
        if set.count_ones() == 1 {
            break;
        }
        v = (reach[set] as u64 & adj[v]).trailing_zeros() as usize;
        cycle.push(v);
    }
    cycle.push(low);
    cycle.reverse();
    (spectrum, Some(cycle))
}

struct Bnb<'a> {
    g: &'a Graph,
    what: &'static str,
    nodes: u64,
    budget: u64,
    stack: Vec<usize>,
}

impl Bnb<'_> {
    fn tick(&mut self) -> Result<(), AnalysisError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(AnalysisError::BudgetExceeded {
                what: self.what,
                graph6: self.g.to_graph6(),
                limit: self.budget,
            });
        }
        Ok(())
    }
}

fn longest_path_bnb(g: &Graph, budget: u64) -> Result<Vec<usize>, AnalysisError> {
    let n = g.n();
    let mut search = Bnb { g, what: "longest path branch and bound", nodes: 0, budget, stack: Vec::with_capacity(n) };
    let mut best = vec![0usize];

    fn dfs(s: &mut Bnb<'_>, best: &mut Vec<usize>, visited: VertexSet) -> Result<(), AnalysisError> {
        s.tick()?;
        if s.stack.len() > best.len() {
            best.clone_from(&s.stack);
        }
        let v = *s.stack.last().unwrap();
        let open = s.g.vertices().difference(visited);
        let reach = s.g.component_of(v, open.with(v));
        // A vertex with at most one neighbor left can only end the path.
        let leaves = reach.without(v).iter().filter(|&u| s.g.neighbors(u).intersection(reach).len() <= 1).count();
        let reachable = reach.len() - 1 - leaves.saturating_sub(1);
        if s.stack.len() + reachable <= best.len() {
            return Ok(());
        }
        for u in s.g.neighbors(v).intersection(open) {
            s.stack.push(u);
            dfs(s, best, visited.with(u))?;
            s.stack.pop();
            if best.len() == s.g.n() {
                break;
            }
        }
        Ok(())
    }

    // Starting from low-degree vertices finds long paths early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| g.degree(v));
    for v in order {
        if best.len() == n {
            break;
        }
        search.stack.clear();
        search.stack.push(v);
        dfs(&mut search, &mut best, VertexSet::EMPTY.with(v))?;
    }
    Ok(best)
}

fn cycles_bnb(g: &Graph, budget: u64) -> Result<(CycleSpectrum, Option<Vec<usize>>), AnalysisError> {
    let n = g.n();
    let mut search = Bnb { g, what: "cycle branch and bound", nodes: 0, budget, stack: Vec::with_capacity(n) };
    let mut spectrum = CycleSpectrum::default();
    let mut witness: Option<Vec<usize>> = None;

    struct Ctx {
        root: usize,
        allowed: VertexSet,
    }

    fn dfs(
        s: &mut Bnb<'_>,
        ctx: &Ctx,
        spectrum: &mut CycleSpectrum,
        witness: &mut Option<Vec<usize>>,
        visited: VertexSet,
    ) -> Result<(), AnalysisError> {
        s.tick()?;
        let v = *s.stack.last().unwrap();
        let len = s.stack.len();
        if len >= 3 && s.g.has_edge(v, ctx.root) {
            spectrum.insert(len);
            if witness.as_ref().is_none_or(|w| w.len() < len) {
                *witness = Some(s.stack.clone());
            }
        }
        let open = ctx.allowed.difference(visited);
        let reach = s.g.component_of(v, open.with(v)).without(v);
        // Only cycles closing through a neighbor of the root are possible.
        if reach.intersection(s.g.neighbors(ctx.root)).is_empty() {
            return Ok(());
        }
        if spectrum.contains_range((len + 1).max(3), len + reach.len()) {
            return Ok(());
        }
        for u in s.g.neighbors(v).intersection(open) {
            s.stack.push(u);
            dfs(s, ctx, spectrum, witness, visited.with(u))?;
            s.stack.pop();
        }
        Ok(())
    }

    // Vertices outside the 2-core lie on no cycle.
    let mut core = g.vertices();
    while let Some(v) = core.iter().find(|&v| g.neighbors(v).intersection(core).len() < 2) {
        core.remove(v);
    }
    for root in core {
        let allowed = core.difference(VertexSet::full(root + 1));
        let ctx = Ctx { root, allowed };
        search.stack.clear();
        search.stack.push(root);
        dfs(&mut search, &ctx, &mut spectrum, &mut witness, VertexSet::EMPTY.with(root))?;
    }
    Ok((spectrum, witness))
}
