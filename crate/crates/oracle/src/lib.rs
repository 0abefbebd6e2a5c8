//! Naive reference computations for cross-checking the fast kernels.
//!
//! Everything here works on a plain boolean adjacency matrix and uses
//! exhaustive enumeration (all vertex subsets, all permutations). Nothing
//! is shared with the production crate so the two routes stay independent.

use std::collections::BTreeSet;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(n: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `counts[j-1]` is the number of j-vertex subsets inducing a complete graph,
/// trimmed after the largest nonzero entry.
pub fn clique_counts(a: &Matrix) -> Vec<u64> {
    let n = a.len();
    let mut counts = vec![0u64; n + 1];
    for mask in 1u64..(1u64 << n) {
        let verts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let complete = verts.iter().enumerate().all(|(i, &u)| verts[i + 1..].iter().all(|&v| a[u][v]));
        if complete {
            counts[verts.len()] += 1;
        }
    }
    let omega = (0..=n).rev().find(|&j| counts[j] > 0).unwrap_or(0);
    counts[1..=omega].to_vec()
}

/// Longest path (edges), circumference and cycle spectrum from every
/// permutation of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCycleBrute {
    pub longest_path_edges: usize,
    pub circumference: usize,
    pub spectrum: BTreeSet<usize>,
}

pub fn path_cycle(a: &Matrix) -> PathCycleBrute {
    let n = a.len();
    let mut out = PathCycleBrute { longest_path_edges: 0, circumference: 0, spectrum: BTreeSet::new() };
    if n == 0 {
        return out;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut visit = |p: &[usize]| {
        let mut len = 1;
        while len < n && a[p[len - 1]][p[len]] {
            len += 1;
        }
        out.longest_path_edges = out.longest_path_edges.max(len - 1);
        for t in 3..=len {
            if a[p[t - 1]][p[0]] {
                out.spectrum.insert(t);
            }
        }
    };
    heap_permutations(&mut perm, &mut visit);
    out.circumference = out.spectrum.iter().next_back().copied().unwrap_or(0);
    out
}

fn heap_permutations(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn connected_without(a: &Matrix, removed: Option<usize>) -> bool {
    let n = a.len();
    let alive: Vec<usize> = (0..n).filter(|&v| Some(v) != removed).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] && Some(v) != removed {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn is_connected(a: &Matrix) -> bool {
    !a.is_empty() && connected_without(a, None)
}

/// Connected, at least three vertices, and still connected after removing any one vertex.
pub fn is_two_connected(a: &Matrix) -> bool {
    a.len() >= 3 && is_connected(a) && (0..a.len()).all(|v| connected_without(a, Some(v)))
}

pub fn min_degree(a: &Matrix) -> usize {
    a.iter().map(|row| row.iter().filter(|&&b| b).count()).min().unwrap_or(0)
}

/// Every simple path (as vertex sequence, at least one edge) that cannot be
/// extended at either end.
pub fn maximal_paths(a: &Matrix) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut used = vec![false; n];
    fn grow(a: &Matrix, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        let mut extended = false;
        for v in 0..a.len() {
            if a[last][v] && !used[v] {
                extended = true;
                used[v] = true;
                path.push(v);
                grow(a, path, used, out);
                path.pop();
                used[v] = false;
            }
        }
        if !extended && path.len() >= 2 {
            let first = path[0];
            let head_stuck = (0..a.len()).all(|v| !a[first][v] || used[v]);
            if head_stuck {
                out.push(path.clone());
            }
        }
    }
    for s in 0..n {
        used[s] = true;
        path.push(s);
        grow(a, &mut path, &mut used, &mut out);
        path.pop();
        used[s] = false;
    }
    out
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn largest_eigenvalue(a: &Matrix) -> f64 {
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    let mut m: Vec<Vec<f64>> = a.iter().map(|row| row.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()).collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    (0..n).map(|i| m[i][i]).fold(f64::NEG_INFINITY, f64::max)
}
