//! Theorem checks on concrete graphs.
//!
//! A check evaluates the theorem's premise on the graph, the bound from the
//! parameters, and the observable the theorem talks about (`e(G)`, `N_s(G)`,
//! a path or cycle length). A failed premise is a regular verdict with
//! `premise_met == false`, never an error, so parameter sweeps need no
//! pre-filtering. `holds` and `tight` are only ever true when the premise is
//! met.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundValue};
use crate::cliques::{clique_profile_with_budget, CliqueProfile, DEFAULT_CLIQUE_BUDGET};
use crate::error::AnalysisError;
use crate::graph::{Connectivity, Graph};
use crate::paths::{self, CycleSpectrum, SearchLimits, WheelWitness};

pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Edge bound without long cycles.
    #[serde(rename = "EG_CYCLE")]
    EgCycle,
    /// Edge bound without `P_l`.
    #[serde(rename = "EG_PATH")]
    EgPath,
    /// Long path from clique ratios.
    #[serde(rename = "EXT_EG")]
    ExtEg,
    /// `P_l ∨ K_1` and consecutive short cycles from clique ratios.
    #[serde(rename = "WHEEL")]
    Wheel,
    #[serde(rename = "LUO_CYCLE")]
    LuoCycle,
    #[serde(rename = "LUO_PATH")]
    LuoPath,
    /// Edges of 2-connected graphs with bounded circumference.
    #[serde(rename = "KOPYLOV")]
    Kopylov,
    /// `N_s` of 2-connected graphs with bounded circumference.
    #[serde(rename = "LUO_2CONN")]
    Luo2Conn,
    /// As `LUO_2CONN` with a minimum-degree parameter.
    #[serde(rename = "MINDEG_CYCLE")]
    MindegCycle,
    /// `N_s` of connected `P_l`-free graphs with a minimum-degree parameter.
    #[serde(rename = "MINDEG_PATH")]
    MindegPath,
    /// All cycle lengths `3..=⌊3N_3/N_2 + 2⌋`.
    #[serde(rename = "FACT1")]
    Fact1,
    /// Long cycle from the endpoint degrees of a path.
    #[serde(rename = "KOPYLOV_LEMMA")]
    KopylovLemma,
    /// `MINDEG_CYCLE` restricted to `s = 2`.
    #[serde(rename = "WOODALL")]
    Woodall,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::EgCycle,
        TheoremId::EgPath,
        TheoremId::ExtEg,
        TheoremId::Wheel,
        TheoremId::LuoCycle,
        TheoremId::LuoPath,
        TheoremId::Kopylov,
        TheoremId::Luo2Conn,
        TheoremId::MindegCycle,
        TheoremId::MindegPath,
        TheoremId::Fact1,
        TheoremId::KopylovLemma,
        TheoremId::Woodall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::EgCycle => "EG_CYCLE",
            TheoremId::EgPath => "EG_PATH",
            TheoremId::ExtEg => "EXT_EG",
            TheoremId::Wheel => "WHEEL",
            TheoremId::LuoCycle => "LUO_CYCLE",
            TheoremId::LuoPath => "LUO_PATH",
            TheoremId::Kopylov => "KOPYLOV",
            TheoremId::Luo2Conn => "LUO_2CONN",
            TheoremId::MindegCycle => "MINDEG_CYCLE",
            TheoremId::MindegPath => "MINDEG_PATH",
            TheoremId::Fact1 => "FACT1",
            TheoremId::KopylovLemma => "KOPYLOV_LEMMA",
            TheoremId::Woodall => "WOODALL",
        }
    }

    /// Short alias accepted on the command line (`T1`, `L1`, `C1`, …).
    pub fn alias(self) -> &'static str {
        match self {
            TheoremId::EgCycle => "T1",
            TheoremId::EgPath => "T2",
            TheoremId::ExtEg => "T3",
            TheoremId::Wheel => "T4",
            TheoremId::LuoCycle => "T5",
            TheoremId::LuoPath => "T6",
            TheoremId::Kopylov => "T7",
            TheoremId::Luo2Conn => "T8",
            TheoremId::MindegCycle => "T9",
            TheoremId::MindegPath => "T11",
            TheoremId::Fact1 => "FACT1",
            TheoremId::KopylovLemma => "L1",
            TheoremId::Woodall => "C1",
        }
    }

    /// Parameters that must be supplied.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            TheoremId::EgCycle | TheoremId::EgPath => &["l"],
            TheoremId::ExtEg => &["s"],
            TheoremId::Wheel => &["k"],
            TheoremId::LuoCycle | TheoremId::LuoPath => &["s", "l"],
            TheoremId::Kopylov => &["c"],
            TheoremId::Luo2Conn => &["c", "s"],
            TheoremId::MindegCycle => &["k", "c", "s"],
            TheoremId::MindegPath => &["k", "l", "s"],
            TheoremId::Fact1 | TheoremId::KopylovLemma => &[],
            TheoremId::Woodall => &["k", "c"],
        }
    }

    /// Whether the observable is bounded from below (path/cycle existence)
    /// rather than from above (counts in a forbidden-subgraph class).
    pub fn is_lower_bound(self) -> bool {
        matches!(self, TheoremId::ExtEg | TheoremId::Wheel | TheoremId::Fact1 | TheoremId::KopylovLemma)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerdictError;

    fn from_str(s: &str) -> Result<Self, VerdictError> {
        let key = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == key || t.alias() == key)
            .ok_or_else(|| VerdictError::UnknownTheorem(s.to_string()))
    }
}

/// Which premise a counterexample search is allowed to weaken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relaxation {
    #[default]
    None,
    /// Accept connected graphs where 2-connectivity is required.
    TwoConnected,
    /// Drop the minimum-degree requirement.
    MinDegree,
    /// Drop connectivity requirements altogether.
    Connected,
}

impl FromStr for Relaxation {
    type Err = VerdictError;

    fn from_str(s: &str) -> Result<Self, VerdictError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" => Ok(Relaxation::None),
            "two-connected" | "2connected" | "2-connected" => Ok(Relaxation::TwoConnected),
            "min-degree" | "mindegree" | "delta" => Ok(Relaxation::MinDegree),
            "connected" => Ok(Relaxation::Connected),
            _ => Err(VerdictError::InvalidParam(format!("unknown premise relaxation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Path { vertices: Vec<usize> },
    Cycle { vertices: Vec<usize> },
    Wheel(WheelWitness),
    Spectrum { lengths: CycleSpectrum },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem_id: TheoremId,
    pub params: Params,
    pub premise_met: bool,
    /// The theorem's bound, when its formula is defined for the parameters.
    pub bound: Option<BoundValue>,
    /// The measured quantity; only computed when the premise is met.
    #[serde(with = "opt_bigint_string")]
    pub observed: Option<BigInt>,
    pub holds: bool,
    pub tight: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        self.premise_met && !self.holds
    }

    /// The verdict without its identity fields, for alias comparisons.
    pub fn outcome(&self) -> (bool, Option<&BoundValue>, Option<&BigInt>, bool, bool) {
        (self.premise_met, self.bound.as_ref(), self.observed.as_ref(), self.holds, self.tight)
    }
}

mod opt_bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.collect_str(x),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| s.parse().map_err(serde::de::Error::custom)).transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerdictError {
    #[error("{theorem} requires parameter {name:?}")]
    MissingParam { theorem: TheoremId, name: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Work caps for the exact analyses behind a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub clique_budget: u64,
    pub search: SearchLimits,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { clique_budget: DEFAULT_CLIQUE_BUDGET, search: SearchLimits::default() }
    }
}

/// Lazily computed invariants of one graph, shared by all checks on it.
pub struct GraphFacts<'g> {
    graph: &'g Graph,
    limits: Limits,
    connectivity: OnceCell<Connectivity>,
    cliques: OnceCell<Result<CliqueProfile, AnalysisError>>,
    longest_path: OnceCell<Result<(usize, Vec<usize>), AnalysisError>>,
    cycles: OnceCell<Result<(CycleSpectrum, Option<Vec<usize>>), AnalysisError>>,
    wheel: OnceCell<Result<Option<WheelWitness>, AnalysisError>>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(graph: &'g Graph, limits: Limits) -> Self {
        GraphFacts {
            graph,
            limits,
            connectivity: OnceCell::new(),
            cliques: OnceCell::new(),
            longest_path: OnceCell::new(),
            cycles: OnceCell::new(),
            wheel: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn n(&self) -> i64 {
        self.graph.n() as i64
    }

    pub fn min_degree(&self) -> i64 {
        self.graph.min_degree().unwrap_or(0) as i64
    }

    pub fn connectivity(&self) -> Connectivity {
        *self.connectivity.get_or_init(|| self.graph.connectivity_profile())
    }

    pub fn cliques(&self) -> Result<&CliqueProfile, AnalysisError> {
        self.cliques
            .get_or_init(|| clique_profile_with_budget(self.graph, self.limits.clique_budget))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn omega(&self) -> Result<i64, AnalysisError> {
        Ok(self.cliques()?.omega() as i64)
    }

    pub fn longest_path(&self) -> Result<(usize, &[usize]), AnalysisError> {
        self.longest_path
            .get_or_init(|| paths::longest_path(self.graph, &self.limits.search))
            .as_ref()
            .map(|(len, w)| (*len, w.as_slice()))
            .map_err(Clone::clone)
    }

    pub fn spectrum(&self) -> Result<CycleSpectrum, AnalysisError> {
        Ok(self.cycles()?.0)
    }

    pub fn circumference(&self) -> Result<usize, AnalysisError> {
        Ok(self.cycles()?.0.max().unwrap_or(0))
    }

    fn cycles(&self) -> Result<&(CycleSpectrum, Option<Vec<usize>>), AnalysisError> {
        self.cycles
            .get_or_init(|| paths::cycle_structure(self.graph, &self.limits.search))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn wheel(&self) -> Result<Option<&WheelWitness>, AnalysisError> {
        self.wheel
            .get_or_init(|| paths::max_wheel(self.graph, &self.limits.search))
            .as_ref()
            .map(Option::as_ref)
            .map_err(Clone::clone)
    }

    fn n_s(&self, s: i64) -> Result<BigInt, AnalysisError> {
        Ok(BigInt::from(self.cliques()?.count(s.max(0) as usize)))
    }
}

/// Checks one theorem on one graph with default analysis limits.
pub fn check(theorem: TheoremId, g: &Graph, params: &Params) -> Result<Verdict, VerdictError> {
    check_with(&GraphFacts::new(g, Limits::default()), theorem, params, Relaxation::None)
}

/// Checks one theorem against precomputed facts, optionally with a weakened premise.
pub fn check_with(
    facts: &GraphFacts<'_>,
    theorem: TheoremId,
    params: &Params,
    relax: Relaxation,
) -> Result<Verdict, VerdictError> {
    let get = |name: &'static str| -> Result<i64, VerdictError> {
        params.get(name).copied().ok_or(VerdictError::MissingParam { theorem, name })
    };
    let fixed_s = |value: i64| -> Result<i64, VerdictError> {
        match params.get("s") {
            Some(&s) if s != value => {
                Err(VerdictError::InvalidParam(format!("{theorem} is stated for s = {value}, got s = {s}")))
            }
            _ => Ok(value),
        }
    };
    let v = match theorem {
        TheoremId::EgCycle => eg_cycle(facts, get("l")?)?,
        TheoremId::EgPath => eg_path(facts, get("l")?)?,
        TheoremId::ExtEg => ext_eg(facts, get("s")?)?,
        TheoremId::Wheel => wheel(facts, get("k")?)?,
        TheoremId::LuoCycle => luo_cycle(facts, get("s")?, get("l")?)?,
        TheoremId::LuoPath => luo_path(facts, get("s")?, get("l")?)?,
        TheoremId::Kopylov => mindeg_cycle(facts, 2, get("c")?, fixed_s(2)?, relax)?,
        TheoremId::Luo2Conn => mindeg_cycle(facts, 2, get("c")?, get("s")?, relax)?,
        TheoremId::MindegCycle => mindeg_cycle(facts, get("k")?, get("c")?, get("s")?, relax)?,
        TheoremId::Woodall => mindeg_cycle(facts, get("k")?, get("c")?, fixed_s(2)?, relax)?,
        TheoremId::MindegPath => mindeg_path(facts, get("k")?, get("l")?, get("s")?, relax)?,
        TheoremId::Fact1 => fact1(facts)?,
        TheoremId::KopylovLemma => {
            let start = params.get("start").copied().unwrap_or(0);
            let n = facts.n();
            if !(0..n).contains(&start) {
                Outcome::not_met(None)
            } else {
                let path = paths::greedy_maximal_path(facts.graph(), start as usize);
                lemma(facts, &path)?
            }
        }
    };
    v.finish(theorem, effective_params(theorem, params))
}

fn effective_params(theorem: TheoremId, params: &Params) -> Params {
    let mut p = params.clone();
    match theorem {
        TheoremId::Kopylov => {
            p.insert("k".into(), 2);
            p.insert("s".into(), 2);
        }
        TheoremId::Luo2Conn => {
            p.insert("k".into(), 2);
        }
        TheoremId::Woodall => {
            p.insert("s".into(), 2);
        }
        _ => {}
    }
    p
}

/// Intermediate result before identity fields are attached.
struct Outcome {
    premise_met: bool,
    bound: Option<BoundValue>,
    observed: Option<BigInt>,
    holds: bool,
    tight: bool,
    witness: Option<Witness>,
}

impl Outcome {
    fn not_met(bound: Option<BoundValue>) -> Self {
        Outcome { premise_met: false, bound, observed: None, holds: false, tight: false, witness: None }
    }

    /// `observed ≤ bound`, tight on equality.
    fn upper(bound: BoundValue, observed: BigInt, witness: Option<Witness>) -> Self {
        let ord = bound.compare_integer(&observed);
        Outcome {
            premise_met: true,
            holds: ord.is_le(),
            tight: ord.is_eq(),
            bound: Some(bound),
            observed: Some(observed),
            witness,
        }
    }

    /// `observed ≥ bound`, tight when `observed = ⌈bound⌉`.
    fn lower(bound: BoundValue, observed: BigInt, witness: Option<Witness>) -> Self {
        let holds = bound.compare_integer(&observed).is_ge();
        Outcome {
            premise_met: true,
            tight: holds && observed == bound.ceil(),
            holds,
            bound: Some(bound),
            observed: Some(observed),
            witness,
        }
    }

    fn finish(self, theorem: TheoremId, params: Params) -> Result<Verdict, VerdictError> {
        debug_assert!(!self.tight || self.holds);
        debug_assert!(self.premise_met || !self.holds);
        Ok(Verdict {
            theorem_id: theorem,
            params,
            premise_met: self.premise_met,
            bound: self.bound,
            observed: self.observed,
            holds: self.holds,
            tight: self.tight,
            witness: self.witness,
        })
    }
}

fn path_witness(facts: &GraphFacts<'_>) -> Result<Option<Witness>, AnalysisError> {
    Ok(Some(Witness::Path { vertices: facts.longest_path()?.1.to_vec() }))
}

fn eg_cycle(facts: &GraphFacts<'_>, l: i64) -> Result<Outcome, VerdictError> {
    let bound = bounds::eg_cycle_bound(facts.n(), l).ok();
    let Some(bound) = bound else {
        return Ok(Outcome::not_met(None));
    };
    if facts.circumference()? as i64 >= l {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, BigInt::from(facts.graph().m()), None))
}

fn eg_path(facts: &GraphFacts<'_>, l: i64) -> Result<Outcome, VerdictError> {
    let Some(bound) = bounds::eg_path_bound(facts.n(), l).ok() else {
        return Ok(Outcome::not_met(None));
    };
    if facts.longest_path()?.0 as i64 >= l - 1 {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, BigInt::from(facts.graph().m()), path_witness(facts)?))
}

fn ext_eg(facts: &GraphFacts<'_>, s: i64) -> Result<Outcome, VerdictError> {
    if facts.n() == 0 || s < 1 || s > facts.omega()? {
        return Ok(Outcome::not_met(None));
    }
    let bound = bounds::extended_eg_bound(facts.cliques()?, s as usize).expect("s checked against omega");
    let observed = BigInt::from(facts.longest_path()?.0);
    Ok(Outcome::lower(bound, observed, path_witness(facts)?))
}

fn wheel(facts: &GraphFacts<'_>, k: i64) -> Result<Outcome, VerdictError> {
    if k < 2 || k > facts.omega()? {
        return Ok(Outcome::not_met(None));
    }
    let profile = facts.cliques()?;
    let k = k as usize;
    // ratio = (k+1) N_{k+1} / N_k
    let ratio =
        BoundValue::new(BigInt::from(k + 1) * BigInt::from(profile.count(k + 1)), BigInt::from(profile.count(k)));
    let bound = BoundValue::new(ratio.numer() + BigInt::from(k as i64 - 1) * ratio.denom(), ratio.denom().clone());
    let w = facts.wheel()?.expect("k >= 2 cliques imply an edge").clone();
    let mut out = Outcome::lower(bound, BigInt::from(w.l), Some(Witness::Wheel(w)));
    let top = ratio.ceil() + BigInt::from(k);
    let top = usize::try_from(top).unwrap_or(usize::MAX);
    if !facts.spectrum()?.contains_range(3, top) {
        out.holds = false;
        out.tight = false;
    }
    Ok(out)
}

fn luo_cycle(facts: &GraphFacts<'_>, s: i64, l: i64) -> Result<Outcome, VerdictError> {
    let Some(bound) = bounds::luo_cycle_bound(facts.n(), s, l).ok() else {
        return Ok(Outcome::not_met(None));
    };
    if facts.circumference()? as i64 >= l {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, facts.n_s(s)?, None))
}

fn luo_path(facts: &GraphFacts<'_>, s: i64, l: i64) -> Result<Outcome, VerdictError> {
    let Some(bound) = bounds::luo_path_bound(facts.n(), s, l).ok() else {
        return Ok(Outcome::not_met(None));
    };
    if facts.longest_path()?.0 as i64 >= l - 1 {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, facts.n_s(s)?, None))
}

fn mindeg_cycle(facts: &GraphFacts<'_>, k: i64, c: i64, s: i64, relax: Relaxation) -> Result<Outcome, VerdictError> {
    let bound = bounds::kopylov_cycle_bound(facts.n(), k, c, s).ok();
    let conn = facts.connectivity();
    let connectivity_ok = match relax {
        Relaxation::TwoConnected => conn.connected,
        Relaxation::Connected => true,
        _ => conn.two_connected,
    };
    let degree_ok = relax == Relaxation::MinDegree || facts.min_degree() >= k;
    let params_ok = facts.n() >= c && c >= 5 && s >= 2 && k >= 2;
    if !(params_ok && connectivity_ok && degree_ok) {
        return Ok(Outcome::not_met(bound));
    }
    let Some(bound) = bound else {
        return Ok(Outcome::not_met(None));
    };
    if facts.circumference()? as i64 >= c {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, facts.n_s(s)?, None))
}

fn mindeg_path(facts: &GraphFacts<'_>, k: i64, l: i64, s: i64, relax: Relaxation) -> Result<Outcome, VerdictError> {
    let bound = bounds::kopylov_path_bound(facts.n(), k, l, s).ok();
    let conn = facts.connectivity();
    let connectivity_ok = relax == Relaxation::Connected || conn.connected;
    let degree_ok = relax == Relaxation::MinDegree || facts.min_degree() >= k;
    let params_ok = facts.n() >= l && l >= 4 && s >= 2 && k >= 1;
    if !(params_ok && connectivity_ok && degree_ok) {
        return Ok(Outcome::not_met(bound));
    }
    let Some(bound) = bound else {
        return Ok(Outcome::not_met(None));
    };
    if facts.longest_path()?.0 as i64 >= l - 1 {
        return Ok(Outcome::not_met(Some(bound)));
    }
    Ok(Outcome::upper(bound, facts.n_s(s)?, None))
}

/// Requirement `{3, …, ⌊3N_3/N_2 + 2⌋}`; observed is the top of the run of
/// consecutive cycle lengths starting at 3 (2 if there is no triangle).
fn fact1(facts: &GraphFacts<'_>) -> Result<Outcome, VerdictError> {
    let m = facts.graph().m();
    if m == 0 {
        return Ok(Outcome::not_met(None));
    }
    let n3 = facts.n_s(3)?;
    let bound = BoundValue::new(BigInt::from(3) * n3 + BigInt::from(2 * m), BigInt::from(m));
    let spectrum = facts.spectrum()?;
    let run = spectrum.consecutive_from_three();
    let top = bound.floor();
    let observed = BigInt::from(run);
    let holds = observed >= top;
    Ok(Outcome {
        premise_met: true,
        tight: holds && top >= BigInt::from(3) && observed == top,
        holds,
        bound: Some(bound),
        observed: Some(observed),
        witness: Some(Witness::Spectrum { lengths: spectrum }),
    })
}

fn lemma(facts: &GraphFacts<'_>, path: &[usize]) -> Result<Outcome, VerdictError> {
    let g = facts.graph();
    if !facts.connectivity().two_connected || path.len() < 2 || !paths::is_path(g, path) {
        return Ok(Outcome::not_met(None));
    }
    let on_path: crate::graph::VertexSet = path.iter().copied().collect();
    let d_p = |v: usize| g.neighbors(v).intersection(on_path).len();
    let (x, y) = (path[0], path[path.len() - 1]);
    let edges = path.len() - 1;
    let bound = BoundValue::integer((edges + 1).min(d_p(x) + d_p(y)) as i64);
    let observed = BigInt::from(facts.circumference()?);
    Ok(Outcome::lower(bound, observed, Some(Witness::Path { vertices: path.to_vec() })))
}

/// Checks the long-cycle lemma for an explicit path `x … y`: a 2-connected
/// graph has a cycle of length at least `min{m+1, d_P(x)+d_P(y)}` where `m`
/// is the number of path edges and `d_P(v) = |N(v) ∩ V(P)|`.
pub fn kopylov_lemma_check(g: &Graph, path: &[usize], limits: Limits) -> Result<Verdict, VerdictError> {
    let facts = GraphFacts::new(g, limits);
    kopylov_lemma_check_with(&facts, path)
}

pub fn kopylov_lemma_check_with(facts: &GraphFacts<'_>, path: &[usize]) -> Result<Verdict, VerdictError> {
    lemma(facts, path)?.finish(TheoremId::KopylovLemma, Params::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn params(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    fn int(v: i64) -> Option<BoundValue> {
        Some(BoundValue::integer(v))
    }

    #[test]
    fn mindeg_cycle_on_hnkc_is_tight() {
        let g = build_hnkc(10, 2, 6).unwrap();
        let v = check(TheoremId::MindegCycle, &g, &params(&[("k", 2), ("c", 6), ("s", 2)])).unwrap();
        assert!(v.premise_met && v.holds && v.tight);
        assert_eq!(v.bound, int(18));
        assert_eq!(v.observed, Some(BigInt::from(18)));
    }

    #[test]
    fn ext_eg_on_clique_plus_pendants() {
        let g = build_clique_plus_pendants(10).unwrap();
        let v = check(TheoremId::ExtEg, &g, &params(&[("s", 7)])).unwrap();
        assert!(v.premise_met && v.holds && !v.tight);
        assert_eq!(v.bound, int(7));
        assert_eq!(v.observed, Some(BigInt::from(8)));
        let v = check(TheoremId::ExtEg, &g, &params(&[("s", 9)])).unwrap();
        assert!(!v.premise_met && !v.holds);
    }

    #[test]
    fn eg_path_on_disjoint_cliques_is_tight() {
        let g = build_disjoint_cliques(8, 5).unwrap();
        let v = check(TheoremId::EgPath, &g, &params(&[("l", 5)])).unwrap();
        assert!(v.premise_met && v.holds && v.tight);
        assert_eq!(v.bound, int(12));
        assert_eq!(v.observed, Some(BigInt::from(12)));
    }

    #[test]
    fn fact1_examples() {
        let v = check(TheoremId::Fact1, &Graph::cycle(4).unwrap(), &Params::new()).unwrap();
        assert!(v.premise_met && v.holds && !v.tight);
        assert_eq!(v.bound, int(2));
        let v = check(TheoremId::Fact1, &Graph::complete(5).unwrap(), &Params::new()).unwrap();
        assert!(v.holds && v.tight);
        assert_eq!(v.bound, int(5));
        let v = check(TheoremId::Fact1, &Graph::complete(4).unwrap(), &Params::new()).unwrap();
        assert!(v.holds);
        assert_eq!(v.bound, int(4));
        let v = check(TheoremId::Fact1, &Graph::empty(3).unwrap(), &Params::new()).unwrap();
        assert!(!v.premise_met);
    }

    #[test]
    fn lemma_examples() {
        let lim = Limits::default();
        let c5 = Graph::cycle(5).unwrap();
        let v = kopylov_lemma_check(&c5, &[0, 1, 2, 3, 4], lim).unwrap();
        assert!(v.premise_met && v.holds);
        assert_eq!(v.bound, int(4));
        assert_eq!(v.observed, Some(BigInt::from(5)));
        let k4 = Graph::complete(4).unwrap();
        let v = kopylov_lemma_check(&k4, &[0, 1, 2], lim).unwrap();
        assert!(v.holds);
        assert_eq!(v.bound, int(3));
        let p4 = Graph::path(4).unwrap();
        assert!(!kopylov_lemma_check(&p4, &[0, 1, 2, 3], lim).unwrap().premise_met);
        assert!(!kopylov_lemma_check(&c5, &[0, 2], lim).unwrap().premise_met);
        let v = check(TheoremId::KopylovLemma, &c5, &params(&[("start", 3)])).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn wheel_examples() {
        let k4 = Graph::complete(4).unwrap();
        let v = check(TheoremId::Wheel, &k4, &params(&[("k", 2)])).unwrap();
        // bound 3*4/6 + 1 = 3, wheel P_3 ∨ K_1 and cycles 3..=4.
        assert!(v.premise_met && v.holds && v.tight);
        assert_eq!(v.bound, int(3));
        let v = check(TheoremId::Wheel, &Graph::cycle(5).unwrap(), &params(&[("k", 2)])).unwrap();
        assert!(v.premise_met && v.holds);
        assert_eq!(v.bound, int(1));
        assert!(!check(TheoremId::Wheel, &k4, &params(&[("k", 5)])).unwrap().premise_met);
    }

    #[test]
    fn aliases_agree() {
        for g in [build_hnkc(10, 2, 6).unwrap(), build_hnkc(9, 3, 7).unwrap(), Graph::cycle(6).unwrap()] {
            for c in 5..=g.n() as i64 {
                let t7 = check(TheoremId::Kopylov, &g, &params(&[("c", c), ("s", 2)])).unwrap();
                let t9 = check(TheoremId::MindegCycle, &g, &params(&[("k", 2), ("c", c), ("s", 2)])).unwrap();
                assert_eq!(t7.outcome(), t9.outcome());
                assert_eq!(t7.params, t9.params);
                for k in 2..=4 {
                    let c1 = check(TheoremId::Woodall, &g, &params(&[("k", k), ("c", c)])).unwrap();
                    let t9 = check(TheoremId::MindegCycle, &g, &params(&[("k", k), ("c", c), ("s", 2)])).unwrap();
                    assert_eq!(c1.outcome(), t9.outcome());
                }
            }
        }
    }

    #[test]
    fn missing_and_bad_params() {
        let g = Graph::complete(5).unwrap();
        assert!(matches!(
            check(TheoremId::MindegCycle, &g, &params(&[("k", 2)])),
            Err(VerdictError::MissingParam { name: "c", .. })
        ));
        assert!(matches!(
            check(TheoremId::Kopylov, &g, &params(&[("c", 5), ("s", 3)])),
            Err(VerdictError::InvalidParam(_))
        ));
        let v = check(TheoremId::EgCycle, &g, &params(&[("l", 2)])).unwrap();
        assert!(!v.premise_met && v.bound.is_none());
    }

    #[test]
    fn ext_eg_at_s1_is_edge_density() {
        let g = Graph::petersen();
        let v = check(TheoremId::ExtEg, &g, &params(&[("s", 1)])).unwrap();
        assert_eq!(v.bound, int(3));
        assert!(v.holds);
    }

    #[test]
    fn theorem_names_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.alias().to_lowercase().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.name()));
        }
        assert!("T10".parse::<TheoremId>().is_err());
    }

    #[test]
    fn verdict_json_is_stable() {
        let g = build_hnkc(10, 2, 6).unwrap();
        let v = check(TheoremId::MindegCycle, &g, &params(&[("k", 2), ("c", 6), ("s", 2)])).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "theorem_id": "MINDEG_CYCLE",
                "params": {"c": 6, "k": 2, "s": 2},
                "premise_met": true,
                "bound": "18/1",
                "observed": "18",
                "holds": true,
                "tight": true,
                "witness": null
            })
        );
        let back: Verdict = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn relaxed_premise_admits_cut_vertex_graphs() {
        // Two K_4 sharing a vertex: circumference 4, δ = 3, m = 12 > f_2(7,2,5) = 11.
        let g = build_shared_vertex_cliques(7, 5).unwrap();
        let p = params(&[("k", 2), ("c", 5), ("s", 2)]);
        let strict = check(TheoremId::MindegCycle, &g, &p).unwrap();
        assert!(!strict.premise_met);
        let facts = GraphFacts::new(&g, Limits::default());
        let relaxed = check_with(&facts, TheoremId::MindegCycle, &p, Relaxation::TwoConnected).unwrap();
        assert!(relaxed.is_violation());
        assert_eq!(relaxed.bound, int(11));
    }
}
