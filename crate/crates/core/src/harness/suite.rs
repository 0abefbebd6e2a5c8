use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::GENERATOR_ID;
use super::grid::{ExpandError, ParamGrid};
use super::source::{GraphSource, SourceItem};
use super::{ClassFilter, HarnessError};
use crate::bounds::BoundValue;
use crate::constructions::ConstructionSpec;
use crate::error::AnalysisError;
use crate::verdicts::{check_with, GraphFacts, Limits, Params, Relaxation, TheoremId, Verdict, VerdictError};

pub const REPORT_SCHEMA: u32 = 1;

/// Graphs pulled from the source per parallel batch.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub grid: ParamGrid,
}

impl TheoremCheck {
    pub fn new(theorem: TheoremId, grid: ParamGrid) -> Self {
        TheoremCheck { theorem, grid }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub checks: Vec<TheoremCheck>,
    pub source: GraphSource,
    pub class: ClassFilter,
    pub relax: Relaxation,
    pub limits: Limits,
    /// Stop after this many graphs have been drawn from the source.
    pub max_graphs: Option<u64>,
    /// Report path; the sidecar goes next to it.
    pub output: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(source: GraphSource) -> Self {
        SuiteConfig {
            checks: Vec::new(),
            source,
            class: ClassFilter::All,
            relax: Relaxation::None,
            limits: Limits::default(),
            max_graphs: None,
            output: None,
        }
    }

    pub fn check(mut self, theorem: TheoremId, grid: &str) -> Result<Self, HarnessError> {
        self.checks.push(TheoremCheck::new(theorem, grid.parse()?));
        Ok(self)
    }

    pub fn class(mut self, class: ClassFilter) -> Self {
        self.class = class;
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.limits.clique_budget == 0 || self.limits.search.node_budget == 0 {
            return Err(HarnessError::Config("budgets must be positive".into()));
        }
        for c in &self.checks {
            for &name in c.theorem.required_params() {
                let supplied = c.grid.names().any(|n| n == name);
                let implied = matches!(
                    (c.theorem, name),
                    (TheoremId::Kopylov, "k" | "s") | (TheoremId::Luo2Conn, "k") | (TheoremId::Woodall, "s")
                );
                if !supplied && !implied {
                    return Err(VerdictError::MissingParam { theorem: c.theorem, name }.into());
                }
            }
            if c.grid.uses_construction() && !matches!(self.source, GraphSource::Constructions(_)) {
                return Err(HarnessError::Config(format!(
                    "grid {:?} refers to construction parameters but the source is {}",
                    c.grid.to_string(),
                    self.source
                )));
            }
        }
        self.source.validate()
    }
}

/// Per-check tallies. `checked` counts grid cells; a cell either ran out of
/// budget or produced a verdict, and `violations = premise_met - holds`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCounters {
    pub checked: u64,
    pub premise_met: u64,
    pub holds: u64,
    pub tight: u64,
    pub violations: u64,
    pub budget_exceeded: u64,
}

impl TheoremCounters {
    fn record(&mut self, v: &Verdict) {
        self.checked += 1;
        self.premise_met += v.premise_met as u64;
        self.holds += v.holds as u64;
        self.tight += v.tight as u64;
        self.violations += v.is_violation() as u64;
    }

    fn add(&mut self, o: &TheoremCounters) {
        self.checked += o.checked;
        self.premise_met += o.premise_met;
        self.holds += o.holds;
        self.tight += o.tight;
        self.violations += o.violations;
        self.budget_exceeded += o.budget_exceeded;
    }
}

/// A graph and parameter cell on which a theorem's premise holds but its
/// conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub theorem_id: TheoremId,
    pub params: Params,
    pub bound: Option<BoundValue>,
    pub observed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub theorem: TheoremId,
    pub grid: String,
    #[serde(flatten)]
    pub counters: TheoremCounters,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub generator: String,
    pub source: String,
    pub class: ClassFilter,
    pub relaxation: Relaxation,
    pub limits: Limits,
    pub graphs_examined: u64,
    pub graphs_accepted: u64,
    pub checks: Vec<CheckSummary>,
    pub totals: TheoremCounters,
    /// Sorted by graph6, then theorem, then parameters.
    pub violations: Vec<Certificate>,
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }

    /// The report as JSON with the wall-time field removed, for comparisons.
    pub fn timeless_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("wall_time_secs");
        v
    }
}

pub fn sidecar_path(report: &Path) -> PathBuf {
    let mut s = report.as_os_str().to_owned();
    s.push(".violations.g6");
    PathBuf::from(s)
}

struct GraphOutcome {
    counters: Vec<TheoremCounters>,
    violations: Vec<Certificate>,
}

fn evaluate(item: &SourceItem, cfg: &SuiteConfig) -> Result<Option<GraphOutcome>, HarnessError> {
    let g = &item.graph;
    if !cfg.class.accepts(g) {
        return Ok(None);
    }
    let facts = GraphFacts::new(g, cfg.limits);
    let construction = item.construction;
    let scope = |name: &str| -> Result<Option<i64>, AnalysisError> {
        Ok(match name {
            "n" => Some(facts.n()),
            "m" => Some(g.m() as i64),
            "omega" => Some(facts.omega()?),
            "delta" => Some(facts.min_degree()),
            "maxdeg" => Some(g.max_degree().unwrap_or(0) as i64),
            _ => name.strip_prefix('@').and_then(|key| {
                construction.and_then(|c| c.params().into_iter().find(|(k, _)| *k == key).map(|(_, v)| v))
            }),
        })
    };
    let mut out = GraphOutcome { counters: vec![TheoremCounters::default(); cfg.checks.len()], violations: Vec::new() };
    let mut graph6 = None;
    for (check, counters) in cfg.checks.iter().zip(&mut out.counters) {
        let cells = match check.grid.expand(&scope) {
            Ok(cells) => cells,
            Err(ExpandError::Analysis(AnalysisError::BudgetExceeded { .. })) => {
                counters.checked += 1;
                counters.budget_exceeded += 1;
                continue;
            }
            Err(ExpandError::Analysis(e)) => return Err(e.into()),
            Err(ExpandError::Fatal(e)) => return Err(e),
        };
        for params in cells {
            let verdict = match check_with(&facts, check.theorem, &params, cfg.relax) {
                Ok(v) => v,
                Err(VerdictError::Analysis(AnalysisError::BudgetExceeded { .. })) => {
                    counters.checked += 1;
                    counters.budget_exceeded += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            counters.record(&verdict);
            if verdict.is_violation() {
                let graph6 = graph6.get_or_insert_with(|| g.to_graph6()).clone();
                out.violations.push(Certificate {
                    graph6,
                    theorem_id: verdict.theorem_id,
                    params: verdict.params,
                    bound: verdict.bound,
                    observed: verdict.observed.map(|o| o.to_string()),
                    construction,
                });
            }
        }
    }
    Ok(Some(out))
}

struct Sidecar {
    path: PathBuf,
    file: BufWriter<File>,
}

impl Sidecar {
    fn create(report: &Path) -> Result<Self, HarnessError> {
        let path = sidecar_path(report);
        let file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(true)
            .open(&path)
            .map_err(|e| HarnessError::io(&path, e))?;
        Ok(Sidecar { path, file: BufWriter::new(file) })
    }

    fn append(&mut self, certs: &[Certificate]) -> Result<(), HarnessError> {
        for c in certs {
            writeln!(self.file, "{}", c.graph6).map_err(|e| HarnessError::io(&self.path, e))?;
        }
        self.file.flush().map_err(|e| HarnessError::io(&self.path, e))
    }

    /// Replaces the append-order file with the sorted final list.
    fn finish(self, sorted: &[Certificate]) -> Result<(), HarnessError> {
        drop(self.file);
        let body: String = sorted.iter().map(|c| format!("{}\n", c.graph6)).collect();
        std::fs::write(&self.path, body).map_err(|e| HarnessError::io(&self.path, e))
    }
}

/// Evaluates every (graph, theorem, parameter cell) of the configuration.
///
/// Graphs are processed in batches on the rayon pool and folded back in
/// source order, so the report does not depend on the number of threads.
/// With an output path the JSON report is written there, and each violating
/// graph is appended to `<output>.violations.g6` as soon as its batch is done.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let started = Instant::now();
    cfg.validate()?;
    let mut report = SuiteReport {
        schema: REPORT_SCHEMA,
        generator: GENERATOR_ID.to_string(),
        source: cfg.source.to_string(),
        class: cfg.class,
        relaxation: cfg.relax,
        limits: cfg.limits,
        graphs_examined: 0,
        graphs_accepted: 0,
        checks: cfg
            .checks
            .iter()
            .map(|c| CheckSummary {
                theorem: c.theorem,
                grid: c.grid.to_string(),
                counters: TheoremCounters::default(),
            })
            .collect(),
        totals: TheoremCounters::default(),
        violations: Vec::new(),
        wall_time_secs: 0.0,
    };
    let mut sidecar = cfg.output.as_deref().map(Sidecar::create).transpose()?;

    if !cfg.checks.is_empty() && cfg.max_graphs != Some(0) {
        let mut stream = cfg.source.stream(ClassFilter::All)?;
        let mut remaining = cfg.max_graphs.unwrap_or(u64::MAX);
        loop {
            let take = remaining.min(CHUNK as u64) as usize;
            let chunk = stream.by_ref().take(take).collect::<Result<Vec<SourceItem>, _>>()?;
            if chunk.is_empty() {
                break;
            }
            remaining -= chunk.len() as u64;
            report.graphs_examined += chunk.len() as u64;
            let results: Vec<_> = chunk.par_iter().map(|item| evaluate(item, cfg)).collect();
            let mut fresh = Vec::new();
            for r in results {
                let Some(outcome) = r? else { continue };
                report.graphs_accepted += 1;
                for (summary, c) in report.checks.iter_mut().zip(&outcome.counters) {
                    summary.counters.add(c);
                }
                fresh.extend(outcome.violations);
            }
            if let Some(s) = sidecar.as_mut() {
                s.append(&fresh)?;
            }
            report.violations.extend(fresh);
            if remaining == 0 {
                break;
            }
        }
    }

    for s in &report.checks {
        report.totals.add(&s.counters);
    }
    report.violations.sort();
    debug_assert_eq!(report.totals.violations, report.violations.len() as u64);
    report.wall_time_secs = started.elapsed().as_secs_f64();
    if let Some(path) = &cfg.output {
        sidecar.expect("created with the output path").finish(&report.violations)?;
        let json = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, json + "\n").map_err(|e| HarnessError::io(path, e))?;
    }
    Ok(report)
}

/// Graphs from `source` (at most `budget` drawn) on which `theorem` has its
/// premise met but fails, under the given premise relaxation. Sorted and
/// deterministic for deterministic sources.
pub fn search_counterexamples(
    theorem: TheoremId,
    grid: &ParamGrid,
    source: &GraphSource,
    class: ClassFilter,
    relax: Relaxation,
    budget: u64,
) -> Result<Vec<Certificate>, HarnessError> {
    let cfg = SuiteConfig {
        checks: vec![TheoremCheck::new(theorem, grid.clone())],
        source: source.clone(),
        class,
        relax,
        limits: Limits::default(),
        max_graphs: Some(budget),
        output: None,
    };
    Ok(run_suite(&cfg)?.violations)
}
