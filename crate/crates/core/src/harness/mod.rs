//! Enumeration, sampling, suite execution and counterexample search.

mod enumerate;
pub mod grid;
mod source;
mod suite;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::error::AnalysisError;
use crate::graph::GraphError;
use crate::verdicts::VerdictError;

pub use enumerate::{
    enumerate_graphs, graph_from_mask, sample_gnp, ClassFilter, GnpStream, GENERATOR_ID, MAX_BUILTIN_ORDER,
};
pub use grid::ParamGrid;
pub use source::{ConstructionGrid, GraphSource, SourceItem};
pub use suite::{
    run_suite, search_counterexamples, sidecar_path, Certificate, CheckSummary, SuiteConfig, SuiteReport, TheoremCheck,
    TheoremCounters, REPORT_SCHEMA,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Config(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}, line {line}: {source}", path.display())]
    Record {
        path: PathBuf,
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Verdict(#[from] VerdictError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("writing report: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.to_path_buf(), source }
    }
}
