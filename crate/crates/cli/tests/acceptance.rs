//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use cliquepath::bounds::{eg_cycle_bound, eg_path_bound, f_s};
use cliquepath::cliques::{clique_profile, neighborhood_clique_sum};
use cliquepath::constructions::{
    build_clique_plus_pendants, build_disjoint_cliques, build_hnkc, build_shared_vertex_cliques,
};
use cliquepath::harness::{
    enumerate_graphs, graph_from_mask, run_suite, sample_gnp, ClassFilter, SuiteConfig, SuiteReport,
};
use cliquepath::paths::{cycle_structure, longest_path, SearchLimits};
use cliquepath::spectral::{bipartite_threshold, spectral_radius};
use cliquepath::verdicts::{check, kopylov_lemma_check, Limits, Params, TheoremId};
use cliquepath::{BoundValue, Graph};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(kv: &[(&str, i64)]) -> Params {
    kv.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn suite(source: &str, class: ClassFilter, checks: &[(TheoremId, &str)]) -> Result<SuiteReport, String> {
    let mut cfg = SuiteConfig::new(source.parse().map_err(|e| format!("{e}"))?).class(class);
    for &(t, grid) in checks {
        cfg = cfg.check(t, grid).map_err(|e| format!("{e}"))?;
    }
    run_suite(&cfg).map_err(|e| format!("{e}"))
}

fn clean(report: &SuiteReport) -> Result<(), String> {
    let t = report.totals;
    ensure(t.violations == 0 && report.violations.is_empty(), || {
        format!("{} violations, first {:?}", t.violations, report.violations.first())
    })?;
    ensure(t.budget_exceeded == 0, || format!("{} cells over budget", t.budget_exceeded))
}

fn summary(report: &SuiteReport) -> String {
    let t = report.totals;
    format!(
        "{} graphs, {} cells, {} premise met, {} tight, 0 violations",
        report.graphs_accepted, t.checked, t.premise_met, t.tight
    )
}

fn ac01_extended_paths() -> Outcome {
    let r = suite("builtin:7", ClassFilter::Connected, &[(TheoremId::ExtEg, "s=1..omega")])?;
    clean(&r)?;
    ensure(r.graphs_accepted == 1 + 1 + 4 + 38 + 728 + 26704 + 1866256, || {
        format!("expected every connected labeled graph, saw {}", r.graphs_accepted)
    })?;
    ensure(r.totals.premise_met == r.totals.checked, || "premise should hold on every cell".into())?;
    Ok(summary(&r))
}

fn ac02_circumference_family() -> Outcome {
    let r = suite("builtin:7", ClassFilter::TwoConnected, &[(TheoremId::MindegCycle, "c=5..n,k=2..delta,s=2..omega")])?;
    clean(&r)?;
    ensure(r.totals.premise_met > 0, || "no cell met the premise".into())?;
    Ok(summary(&r))
}

fn ac03_tightness() -> Outcome {
    let limits = SearchLimits::default();
    let mut cells = 0u64;
    let mut graphs = 0u64;
    for n in 5..=16usize {
        for c in 5..=n {
            for k in 2..=(c - 1) / 2 {
                let g = build_hnkc(n, k, c).map_err(|e| e.to_string())?;
                graphs += 1;
                let conn = g.connectivity_profile();
                ensure(conn.two_connected, || format!("H({n},{k},{c}) is not 2-connected"))?;
                ensure(g.min_degree() == Some(k.min(c - k - 1)), || {
                    format!("H({n},{k},{c}) has δ {:?}", g.min_degree())
                })?;
                let (spectrum, _) = cycle_structure(&g, &limits).map_err(|e| e.to_string())?;
                ensure(spectrum.max() == Some(c - 1), || format!("H({n},{k},{c}) circumference {:?}", spectrum.max()))?;
                let profile = clique_profile(&g).map_err(|e| e.to_string())?;
                for s in 2..=c - k {
                    cells += 1;
                    let expected = f_s(n as i64, k as i64, c as i64, s as i64).map_err(|e| e.to_string())?;
                    let got = BoundValue::integer(BigInt::from(profile.count(s)));
                    ensure(got == expected, || format!("N_{s}(H({n},{k},{c})) = {got}, f_s = {expected}"))?;
                }
            }
        }
    }
    Ok(format!("{graphs} graphs, {cells} (n,k,c,s) cells exact"))
}

fn ac04_classical_families() -> Outcome {
    let mut path_cases = 0;
    let mut cycle_cases = 0;
    for n in 1..=20usize {
        for l in 2..=n + 1 {
            if let Ok(g) = build_disjoint_cliques(n, l) {
                let v = check(TheoremId::EgPath, &g, &params(&[("l", l as i64)])).map_err(|e| e.to_string())?;
                let bound = eg_path_bound(n as i64, l as i64).map_err(|e| e.to_string())?;
                ensure(v.premise_met && v.tight && v.bound.as_ref() == Some(&bound), || {
                    format!("disjoint cliques ({n},{l}): {v:?}")
                })?;
                ensure(BoundValue::integer(g.m() as i64) == bound, || format!("({n},{l}) m = {}", g.m()))?;
                path_cases += 1;
            }
            if let Ok(g) = build_shared_vertex_cliques(n, l) {
                let v = check(TheoremId::EgCycle, &g, &params(&[("l", l as i64)])).map_err(|e| e.to_string())?;
                let bound = eg_cycle_bound(n as i64, l as i64).map_err(|e| e.to_string())?;
                ensure(v.premise_met && v.tight && v.bound.as_ref() == Some(&bound), || {
                    format!("shared cliques ({n},{l}): {v:?}")
                })?;
                ensure(BoundValue::integer(g.m() as i64) == bound, || format!("({n},{l}) m = {}", g.m()))?;
                cycle_cases += 1;
            }
        }
    }
    ensure(path_cases > 20 && cycle_cases > 20, || format!("too few cases: {path_cases}, {cycle_cases}"))?;
    Ok(format!("{path_cases} disjoint-clique and {cycle_cases} shared-vertex cases attain the bound exactly"))
}

fn ac05_worked_example() -> Outcome {
    let g = build_clique_plus_pendants(10).map_err(|e| e.to_string())?;
    let s1 = check(TheoremId::ExtEg, &g, &params(&[("s", 1)])).map_err(|e| e.to_string())?;
    let s7 = check(TheoremId::ExtEg, &g, &params(&[("s", 7)])).map_err(|e| e.to_string())?;
    let (p, _) = longest_path(&g, &SearchLimits::default()).map_err(|e| e.to_string())?;
    ensure(s1.bound == Some(BoundValue::integer(6)), || format!("2m/n = {:?}", s1.bound))?;
    ensure(BoundValue::new(10 * 10 - 5 * 10 + 10, 10) == BoundValue::integer(6), || "n-5+10/n".into())?;
    ensure(s7.bound == Some(BoundValue::integer(7)), || format!("s = 7 bound {:?}", s7.bound))?;
    ensure(p == 8, || format!("longest path {p}"))?;
    ensure(s1.holds && s7.holds && s7.observed == Some(BigInt::from(8)), || "verdicts".into())?;
    Ok("bounds 6 and 7, longest path 8".into())
}

fn ac06_luo() -> Outcome {
    let r = suite(
        "builtin:7",
        ClassFilter::All,
        &[(TheoremId::LuoCycle, "s=2..n,l=3..n+1"), (TheoremId::LuoPath, "s=2..n,l=2..n+1")],
    )?;
    clean(&r)?;
    let per: Vec<String> =
        r.checks.iter().map(|c| format!("{} {} premise met", c.theorem, c.counters.premise_met)).collect();
    Ok(format!("{}; {}", summary(&r), per.join(", ")))
}

fn ac07_lemma() -> Outcome {
    // Greedy lowest-index extension from every start vertex, through the suite.
    let r = suite("builtin:6", ClassFilter::TwoConnected, &[(TheoremId::KopylovLemma, "start=0..n-1")])?;
    clean(&r)?;
    ensure(r.totals.premise_met == r.totals.checked, || "every greedy path should qualify".into())?;
    // Every maximal path, whatever order it was grown in.
    let limits = Limits::default();
    let mut paths = 0usize;
    for n in 3..=6 {
        for g in enumerate_graphs(n, ClassFilter::TwoConnected).map_err(|e| e.to_string())? {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            for p in cliquepath_oracle::maximal_paths(&cliquepath_oracle::matrix(n, &edges)) {
                let v = kopylov_lemma_check(&g, &p, limits).map_err(|e| e.to_string())?;
                ensure(v.premise_met && v.holds, || format!("{g} path {p:?}: {v:?}"))?;
                paths += 1;
            }
        }
    }
    Ok(format!("{} greedy paths and {paths} maximal paths, 0 violations", r.totals.checked))
}

fn ac08_double_counting() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=7usize {
        let pairs = n * (n - 1) / 2;
        let result: Result<u64, String> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let profile = clique_profile(&g).map_err(|e| e.to_string())?;
                let mut cells = 0;
                for k in 2..=profile.omega() {
                    let lhs = neighborhood_clique_sum(&g, k).map_err(|e| e.to_string())?;
                    let rhs = BigUint::from(k) * profile.count(k);
                    ensure(lhs == rhs, || format!("{g} k={k}: {lhs} != {rhs}"))?;
                    cells += 1;
                }
                Ok(cells)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b));
        checked += result?;
    }
    Ok(format!("{checked} (graph, k) cells exact"))
}

fn ac09_spectral() -> Outcome {
    for n in 2..=30 {
        let g = Graph::complete_bipartite(n / 2, n - n / 2).map_err(|e| e.to_string())?;
        let mu = spectral_radius(&g, 1e-9).map_err(|e| e.to_string())?.mu;
        let want = bipartite_threshold(n);
        ensure((mu - want).abs() <= 1e-6, || format!("n={n}: {mu} vs {want}"))?;
    }
    let r = suite("builtin:7", ClassFilter::All, &[(TheoremId::Fact1, "")])?;
    clean(&r)?;
    let mut samples = 0;
    let mut premise = r.totals.premise_met;
    for p in [0.3, 0.5, 0.8] {
        for (i, n) in (5..=14).enumerate() {
            let seed = 1000 + i as u64;
            let source = format!("gnp:{n},{p},100,{seed}");
            let r = suite(&source, ClassFilter::All, &[(TheoremId::Fact1, "")])?;
            clean(&r)?;
            samples += r.graphs_accepted;
            premise += r.totals.premise_met;
        }
    }
    ensure(samples == 3000, || format!("{samples} samples"))?;
    Ok(format!(
        "K_(n/2,n/2) within 1e-6 for n in 2..=30; Fact 1 on {} exhaustive + {samples} G(n,p) graphs ({premise} with edges), 0 violations",
        r.graphs_accepted
    ))
}

fn ac10_oracles() -> Outcome {
    let limits = SearchLimits::default();
    let compare = |g: &Graph| -> Result<(), String> {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let a = cliquepath_oracle::matrix(g.n(), &edges);
        let counts: Vec<BigUint> = cliquepath_oracle::clique_counts(&a).into_iter().map(BigUint::from).collect();
        let profile = clique_profile(g).map_err(|e| e.to_string())?;
        ensure(profile.counts() == &counts[..], || format!("{g}: clique counts"))?;
        let brute = cliquepath_oracle::path_cycle(&a);
        let (p, _) = longest_path(g, &limits).map_err(|e| e.to_string())?;
        ensure(p == brute.longest_path_edges, || format!("{g}: longest path {p} vs {}", brute.longest_path_edges))?;
        let (spectrum, _) = cycle_structure(g, &limits).map_err(|e| e.to_string())?;
        ensure(spectrum.max().unwrap_or(0) == brute.circumference, || format!("{g}: circumference"))?;
        ensure(spectrum.iter().eq(brute.spectrum.iter().copied()), || format!("{g}: spectrum {spectrum:?}"))?;
        Ok(())
    };
    let mut count = 0usize;
    for n in 1..=6 {
        let graphs: Vec<Graph> = enumerate_graphs(n, ClassFilter::All).map_err(|e| e.to_string())?.collect();
        graphs.par_iter().try_for_each(compare)?;
        count += graphs.len();
    }
    let densities = [0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9];
    let random: Vec<Graph> = (0..500u64)
        .map(|i| sample_gnp(1 + (i % 8) as usize, densities[(i % 7) as usize], 0xACE0 + i))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    random.par_iter().try_for_each(compare)?;
    Ok(format!("{count} exhaustive + {} seeded random graphs agree exactly", random.len()))
}

fn ac11_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_cliquepath");
    let run = |threads: &str, name: &str| -> Result<(serde_json::Value, String, i32), String> {
        let out = dir.path().join(name);
        let status = Command::new(bin)
            .env("RAYON_NUM_THREADS", threads)
            .args(["verify", "--theorem", "T6", "--params", "s=2..omega,l=2..n"])
            .args(["--source", "gnp:12,0.5,6000,20240601", "--class", "connected", "--out"])
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
        let mut json: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        json.as_object_mut().ok_or("report is not an object")?.remove("wall_time_secs");
        let side = std::fs::read_to_string(cliquepath::harness::sidecar_path(&out)).map_err(|e| e.to_string())?;
        Ok((json, side, status.status.code().unwrap_or(-1)))
    };
    let (serial, side_s, code_s) = run("1", "serial.json")?;
    let (parallel, side_p, code_p) = run("8", "parallel.json")?;
    ensure(code_s == 0 && code_p == 0, || format!("exit codes {code_s}, {code_p}"))?;
    let a = serde_json::to_string_pretty(&serial).unwrap();
    let b = serde_json::to_string_pretty(&parallel).unwrap();
    ensure(a == b, || "serial and 8-way reports differ".into())?;
    ensure(side_s == side_p, || "sidecars differ".into())?;
    ensure(serial["schema"] == 1, || "schema tag".into())?;

    Ok(format!("{} bytes identical across RAYON_NUM_THREADS=1 and 8", a.len()))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 11] = [
        ("AC01", "exhaustive path bound from clique ratios (connected, n <= 7)", ac01_extended_paths),
        ("AC02", "exhaustive 2-connected circumference bound (n <= 7)", ac02_circumference_family),
        ("AC03", "tightness of H(n,k,c) for n <= 16", ac03_tightness),
        ("AC04", "classical tight families for n <= 20", ac04_classical_families),
        ("AC05", "clique plus two pendants, n = 10", ac05_worked_example),
        ("AC06", "clique-count bounds without long cycles / paths (n <= 7)", ac06_luo),
        ("AC07", "long cycle from maximal path endpoints (2-connected, n <= 6)", ac07_lemma),
        ("AC08", "neighborhood double counting (n <= 7)", ac08_double_counting),
        ("AC09", "spectral threshold and short-cycle spectrum", ac09_spectral),
        ("AC10", "oracle equivalence", ac10_oracles),
        ("AC11", "report determinism, serial vs 8 threads", ac11_determinism),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
