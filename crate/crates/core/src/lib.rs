//! Exact invariants behind Erdős–Gallai-type extremal results and the
//! machinery to check those results on concrete graphs.
//!
//! * [`graph`] and [`io`]: bitset graphs on at most 62 vertices, graph6 and
//!   edge-list formats, induced subgraphs, joins, α-disintegration.
//! * [`cliques`]: exact clique counts `N_j(G)`.
//! * [`paths`]: longest path, circumference, cycle spectrum, wheels.
//! * [`spectral`]: adjacency spectral radius.
//! * [`bounds`]: exact rational evaluation of the extremal bounds.
//! * [`constructions`]: the extremal families.
//! * [`verdicts`]: premise/bound/observation checks per theorem.
//! * [`harness`]: enumeration, sampling, suites and counterexample search.

pub mod bounds;
pub mod cliques;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod paths;
pub mod spectral;
pub mod verdicts;

pub use bounds::BoundValue;
pub use cliques::{clique_profile, CliqueProfile};
pub use error::AnalysisError;
pub use graph::{Connectivity, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use paths::{PathCycleProfile, SearchLimits, WheelWitness};
pub use verdicts::{Params, TheoremId, Verdict};
