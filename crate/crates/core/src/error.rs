use thiserror::Error;

use crate::graph::GraphError;

/// Failures of the exact analyses (cliques, paths, cycles, spectra).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("{what} exceeded its budget of {limit} on graph {graph6}")]
    BudgetExceeded { what: &'static str, graph6: String, limit: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: u64, residual: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
