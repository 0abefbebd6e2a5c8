use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cliquepath::cliques::clique_profile;
use cliquepath::constructions::ConstructionSpec;
use cliquepath::harness::{
    run_suite, search_counterexamples, ClassFilter, GraphSource, HarnessError, ParamGrid, SuiteConfig, TheoremCheck,
};
use cliquepath::io::{parse_edge_list, to_edge_list};
use cliquepath::paths::path_cycle_profile;
use cliquepath::spectral::{spectral_radius, DEFAULT_TOLERANCE};
use cliquepath::verdicts::{Limits, Relaxation, TheoremId};
use cliquepath::Graph;

#[derive(Parser)]
#[command(name = "cliquepath", version, about = "Clique counts, long paths and cycles, and extremal bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edgelist,
}

#[derive(clap::Args)]
struct Input {
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Clique profile, longest path, cycle spectrum and spectral radius as JSON.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Print a member of an extremal family in graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Emit an edge list instead of graph6.
        #[arg(long, global = true)]
        edgelist: bool,
    },
    /// Check a theorem over a graph source; exits 1 if anything violates it.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        /// Parameter grid, e.g. `s=1..omega` or `k=2,c=5..n,s=2..omega`.
        #[arg(long, default_value = "")]
        params: ParamGrid,
        /// `builtin:N`, `g6:FILE`, `gnp:N,P,COUNT,SEED` or `construction:KIND:GRID`.
        #[arg(long)]
        source: GraphSource,
        #[arg(long, default_value = "all")]
        class: ClassFilter,
        /// Weaken one premise (none, two-connected, min-degree, connected).
        #[arg(long, default_value = "none")]
        relax: Relaxation,
        /// Report path; violating graphs also go to `<REPORT>.violations.g6`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Repeatedly delete vertices of degree at most ALPHA; prints what survives.
    Disintegrate {
        #[arg(long)]
        alpha: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Adjacency spectral radius.
    Spectral {
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        input: Input,
    },
    /// Look for graphs that break a theorem once one of its premises is weakened.
    Search {
        #[arg(long)]
        theorem: TheoremId,
        /// none, two-connected, min-degree or connected.
        #[arg(long, default_value = "none")]
        relax: Relaxation,
        #[arg(long, default_value = "")]
        params: ParamGrid,
        #[arg(long)]
        source: GraphSource,
        #[arg(long, default_value = "all")]
        class: ClassFilter,
        /// Maximum number of graphs drawn from the source.
        #[arg(long)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// K_{c-k} plus n-(c-k) vertices joined to the same k clique vertices.
    Hnkc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
    },
    /// Disjoint copies of K_{l-1}.
    DisjointCliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Copies of K_{l-1} sharing one vertex.
    SharedCliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// K_{n-2} with two pendant edges at one vertex.
    CliquePendants {
        #[arg(long)]
        n: usize,
    },
}

type Failure = Box<dyn std::error::Error>;

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input).map_err(|e| format!("{}: {e}", input.input))?
    };
    match input.format {
        Format::Edgelist => Ok(vec![parse_edge_list(&text)?]),
        Format::G6 => text
            .lines()
            .enumerate()
            .map(|(i, l)| (i, l.trim().trim_start_matches(">>graph6<<")))
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, l)| Graph::parse_graph6(l).map_err(|e| format!("line {}: {e}", i + 1).into()))
            .collect(),
    }
}

fn analyze(input: &Input, tol: f64) -> Result<ExitCode, Failure> {
    let mut out = io::stdout().lock();
    for g in read_graphs(input)? {
        let limits = Limits::default();
        let cliques = clique_profile(&g)?;
        let paths = if g.n() > 0 { Some(path_cycle_profile(&g, &limits.search)?) } else { None };
        let spectral = if g.n() > 0 { Some(spectral_radius(&g, tol)?) } else { None };
        let conn = g.connectivity_profile();
        let value = json!({
            "graph6": g.to_graph6(),
            "n": g.n(),
            "m": g.m(),
            "min_degree": g.min_degree(),
            "max_degree": g.max_degree(),
            "connected": conn.connected,
            "two_connected": conn.two_connected,
            "cliques": cliques,
            "paths": paths,
            "spectral": spectral,
        });
        writeln!(out, "{}", serde_json::to_string(&value)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn construct(family: &Family, edgelist: bool) -> Result<ExitCode, Failure> {
    let spec = match *family {
        Family::Hnkc { n, k, c } => ConstructionSpec::Hnkc { n, k, c },
        Family::DisjointCliques { n, l } => ConstructionSpec::DisjointCliques { n, l },
        Family::SharedCliques { n, l } => ConstructionSpec::SharedVertexCliques { n, l },
        Family::CliquePendants { n } => ConstructionSpec::CliquePlusPendants { n },
    };
    let g = spec.build()?;
    if edgelist {
        print!("{}", to_edge_list(&g));
    } else {
        println!("{}", g.to_graph6());
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    theorem: TheoremId,
    params: &ParamGrid,
    source: GraphSource,
    class: ClassFilter,
    relax: Relaxation,
    out: Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    let mut cfg = SuiteConfig::new(source).class(class);
    cfg.relax = relax;
    cfg.checks.push(TheoremCheck::new(theorem, params.clone()));
    cfg.output = out.clone();
    let report = run_suite(&cfg)?;
    let c = report.totals;
    eprintln!(
        "{theorem}: {} graphs, {} cells, premise met {}, holds {}, tight {}, violations {}, over budget {} ({:.2}s)",
        report.graphs_accepted,
        c.checked,
        c.premise_met,
        c.holds,
        c.tight,
        c.violations,
        c.budget_exceeded,
        report.wall_time_secs
    );
    if out.is_none() {
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(if report.has_violations() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze { input, tol } => analyze(&input, tol),
        Command::Construct { family, edgelist } => construct(&family, edgelist),
        Command::Verify { theorem, params, source, class, relax, out } => {
            verify(theorem, &params, source, class, relax, out)
        }
        Command::Disintegrate { alpha, input } => {
            let mut out = io::stdout().lock();
            for g in read_graphs(&input)? {
                writeln!(out, "{}", g.disintegrate(alpha).graph.to_graph6())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectral { tol, input } => {
            let mut out = io::stdout().lock();
            for g in read_graphs(&input)? {
                let r = spectral_radius(&g, tol)?;
                writeln!(out, "{}", serde_json::to_string(&json!({ "graph6": g.to_graph6(), "spectral": r }))?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { theorem, relax, params, source, class, budget } => {
            let certs = search_counterexamples(theorem, &params, &source, class, relax, budget)?;
            eprintln!("{theorem} relaxed {relax:?}: {} certificates", certs.len());
            println!("{}", serde_json::to_string_pretty(&certs)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(HarnessError::Record { .. }) = e.downcast_ref::<HarnessError>() {
                eprintln!("hint: graph6 records must be one per line");
            }
            ExitCode::from(2)
        }
    }
}
