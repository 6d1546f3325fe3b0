//! Numeric ground truth: a cyclic Jacobi eigensolver for dense symmetric
//! matrices and multiset comparison of spectra.
//!
//! The solver is deliberately self-contained so that it shares no code with
//! the companion-matrix root finder it is used to check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix, RealMatrix};

const MAX_SWEEPS: usize = 60;

/// Clustering radius used when counting multiplicities of oracle eigenvalues.
pub const CLUSTER_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    /// Ascending.
    pub values: Vec<f64>,
    /// Largest off-diagonal magnitude left when iteration stopped.
    pub max_offdiag_residual: f64,
    pub sweeps: usize,
    /// Column `i` pairs with `values[i]`; present only when requested.
    #[serde(skip)]
    pub vectors: Option<RealMatrix>,
}

pub fn symmetric_eigenvalues(m: &IntMatrix) -> Result<EigenResult> {
    jacobi_int(m, false)
}

pub fn symmetric_eigensystem(m: &IntMatrix) -> Result<EigenResult> {
    jacobi_int(m, true)
}

fn jacobi_int(m: &IntMatrix, vectors: bool) -> Result<EigenResult> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if let Some((row, col)) = m.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let a: Vec<f64> = m.as_slice().iter().map(|&v| v as f64).collect();
    jacobi(a, m.rows(), vectors)
}

/// Eigen-decomposition of a real symmetric matrix.
pub fn symmetric_eigen_real(m: &RealMatrix, vectors: bool) -> Result<EigenResult> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::NotSquare {
            rows: n,
            cols: m.cols(),
        });
    }
    let mut a = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
            a.push(m[(i, j)]);
        }
    }
    jacobi(a, n, vectors)
}

fn jacobi(mut a: Vec<f64>, n: usize, want_vectors: bool) -> Result<EigenResult> {
    let idx = |i: usize, j: usize| i * n + j;
    let mut v = if want_vectors {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[idx(i, i)] = 1.0;
        }
        Some(v)
    } else {
        None
    };
    let mut d: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];
    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[idx(p, q)].abs())
            .sum();
        if off == 0.0 {
            break;
        }
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return Err(Error::NoConvergence(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal mass {off:e})"
            )));
        }
        let thresh = if sweeps < 4 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                let g = 100.0 * apq.abs();
                if sweeps > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[idx(p, q)] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[idx(p, q)] = 0.0;
                let rot = |a: &mut [f64], i: usize, j: usize| {
                    let (g, h) = (a[i], a[j]);
                    a[i] = g - s * (h + g * tau);
                    a[j] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rot(&mut a, idx(j, p), idx(j, q));
                }
                for j in p + 1..q {
                    rot(&mut a, idx(p, j), idx(j, q));
                }
                for j in q + 1..n {
                    rot(&mut a, idx(p, j), idx(q, j));
                }
                if let Some(v) = v.as_mut() {
                    for j in 0..n {
                        rot(v, idx(j, p), idx(j, q));
                    }
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    let residual = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .map(|(p, q)| a[idx(p, q)].abs())
        .fold(0.0, f64::max);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = v.map(|v| {
        let mut out = RealMatrix::zeros(n, n);
        for (col, &src) in order.iter().enumerate() {
            for r in 0..n {
                out[(r, col)] = v[idx(r, src)];
            }
        }
        out
    });
    Ok(EigenResult {
        values,
        max_offdiag_residual: residual,
        sweeps,
        vectors,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultisetComparison {
    pub equal: bool,
    pub max_deviation: f64,
}

/// Compares two multisets of reals after sorting both.
pub fn multiset_equal(a: &[f64], b: &[f64], tol: f64) -> Result<MultisetComparison> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let max_deviation = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(MultisetComparison {
        equal: max_deviation <= tol,
        max_deviation,
    })
}

/// Groups ascending values into `(mean, count)` clusters; consecutive values
/// closer than `tol` fall in the same cluster.
pub fn cluster(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((sum, count, last)) if (x - *last).abs() <= tol => {
                *sum += x;
                *count += 1;
                *last = x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter()
        .map(|(sum, count, _)| (sum / count as f64, count))
        .collect()
}

pub fn connectivity(g: &Graph) -> bool {
    g.is_connected()
}
