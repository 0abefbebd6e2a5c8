//! Spectral radius of the adjacency matrix.
//!
//! Power iteration on `A + I`, started from the all-ones vector and run per
//! connected component. The shift makes each component's iteration matrix
//! primitive, so bipartite components do not oscillate. Since the iterate
//! stays positive, the Collatz–Wielandt quotients `min_i (Bx)_i / x_i` and
//! `max_i (Bx)_i / x_i` bracket the top eigenvalue; iteration stops once the
//! bracket is narrower than the tolerance and successive Rayleigh quotients
//! agree to a quarter of it.

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::graph::{Graph, VertexSet};
use crate::verdicts::{self, Params, TheoremId, Verdict, VerdictError};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub mu: f64,
    pub tolerance: f64,
    /// Total iterations over all components.
    pub iterations: u64,
}

pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, AnalysisError> {
    spectral_radius_with_cap(g, tol, DEFAULT_MAX_ITERATIONS)
}

pub fn spectral_radius_with_cap(g: &Graph, tol: f64, max_iterations: u64) -> Result<SpectralResult, AnalysisError> {
    if g.n() == 0 {
        return Err(AnalysisError::Domain("spectral radius needs at least one vertex".into()));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AnalysisError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut mu = 0.0f64;
    let mut iterations = 0u64;
    let mut left = g.vertices();
    while let Some(v) = left.first() {
        let comp = g.component_of(v, left);
        left = left.difference(comp);
        if comp.len() == 1 {
            continue;
        }
        let (rho, its) = component_radius(g, comp, tol, max_iterations)?;
        iterations += its;
        mu = mu.max(rho);
    }
    Ok(SpectralResult { mu, tolerance: tol, iterations })
}

fn component_radius(g: &Graph, comp: VertexSet, tol: f64, cap: u64) -> Result<(f64, u64), AnalysisError> {
    let members: Vec<usize> = comp.iter().collect();
    let index = |v: usize| members.binary_search(&v).expect("neighbor inside component");
    let nbrs: Vec<Vec<usize>> = members.iter().map(|&v| g.neighbors(v).iter().map(index).collect()).collect();
    let k = members.len();
    let mut x = vec![1.0f64; k];
    let mut y = vec![0.0f64; k];
    let mut prev_rq = f64::NAN;
    let mut gap = f64::INFINITY;
    for it in 1..=cap {
        for i in 0..k {
            y[i] = x[i] + nbrs[i].iter().map(|&j| x[j]).sum::<f64>();
        }
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut xy, mut xx) = (0.0, 0.0);
        for i in 0..k {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
            xy += x[i] * y[i];
            xx += x[i] * x[i];
        }
        let rq = xy / xx;
        gap = hi - lo;
        if gap <= tol && (rq - prev_rq).abs() < tol / 4.0 {
            return Ok((rq - 1.0, it));
        }
        prev_rq = rq;
        let scale = y.iter().copied().fold(0.0, f64::max);
        for i in 0..k {
            x[i] = y[i] / scale;
        }
    }
    Err(AnalysisError::Convergence { iterations: cap, residual: gap })
}

/// `√⌊n²/4⌋`, the spectral threshold attained by `K_{⌊n/2⌋,⌈n/2⌉}`.
pub fn bipartite_threshold(n: usize) -> f64 {
    ((n * n / 4) as f64).sqrt()
}

/// All cycle lengths from 3 up to `⌊3N_3/N_2 + 2⌋` must be present.
pub fn check_fact1(g: &Graph) -> Result<Verdict, VerdictError> {
    verdicts::check(TheoremId::Fact1, g, &Params::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(g: &Graph) -> f64 {
        spectral_radius(g, DEFAULT_TOLERANCE).unwrap().mu
    }

    #[test]
    fn examples() {
        assert!((mu(&Graph::complete(4).unwrap()) - 3.0).abs() <= 1e-9);
        assert!((mu(&Graph::cycle(5).unwrap()) - 2.0).abs() <= 1e-9);
        assert!((mu(&Graph::complete_bipartite(2, 3).unwrap()) - 6f64.sqrt()).abs() <= 1e-9);
        assert_eq!(mu(&Graph::empty(3).unwrap()), 0.0);
        assert!((mu(&Graph::complete(2).unwrap()) - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn disconnected_takes_component_max() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)]).unwrap();
        assert!((mu(&g) - 2.0).abs() <= 1e-9);
    }

    #[test]
    fn slow_mixing_path_still_meets_tolerance() {
        let g = Graph::path(62).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / 63.0).cos();
        let r = spectral_radius(&g, 1e-10).unwrap();
        assert!((r.mu - expected).abs() <= 1e-10, "{} vs {expected}", r.mu);
    }

    #[test]
    fn errors() {
        assert!(spectral_radius(&Graph::empty(0).unwrap(), 1e-9).is_err());
        assert!(spectral_radius(&Graph::complete(3).unwrap(), 0.0).is_err());
        let g = Graph::path(40).unwrap();
        assert!(matches!(
            spectral_radius_with_cap(&g, 1e-12, 3),
            Err(AnalysisError::Convergence { iterations: 3, .. })
        ));
    }

    #[test]
    fn fact1_examples() {
        let v = check_fact1(&Graph::complete(5).unwrap()).unwrap();
        assert!(v.holds && v.tight);
        let v = check_fact1(&Graph::petersen()).unwrap();
        assert!(v.holds && !v.tight);
        let v = check_fact1(&Graph::empty(4).unwrap()).unwrap();
        assert!(!v.premise_met);
    }
}
