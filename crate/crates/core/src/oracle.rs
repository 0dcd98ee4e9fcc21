//! Numerical ground truth that knows nothing about the closed forms: a cyclic
//! Jacobi eigenvalue solver for dense symmetric matrices, eigenpair residuals,
//! an LU determinant and a golden-section line search.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::DenseSymmetricMatrix;

pub const MAX_SWEEPS: usize = 100;

/// Default Jacobi stopping threshold relative to the Frobenius norm.
pub const DEFAULT_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpectrum {
    /// Ascending.
    pub values: Vec<f64>,
    /// Number of full sweeps performed.
    pub iterations: usize,
    /// Off-diagonal Frobenius norm when the iteration stopped.
    pub offdiag_norm: f64,
}

fn offdiag_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for j in 0..n {
        for k in (j + 1)..n {
            let x = a[j * n + k];
            sum += 2.0 * x * x;
        }
    }
    sum.sqrt()
}

/// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius norm is at
/// most `tol` (default `1e-12 * ||M||_F`).
pub fn jacobi_eigenvalues(m: &DenseSymmetricMatrix, tol: Option<f64>) -> Result<OracleSpectrum> {
    let n = m.order();
    let tol = tol.unwrap_or(DEFAULT_RTOL * m.norm_frobenius());
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let mut a = m.entries().to_vec();
    let mut off = offdiag_norm(&a, n);
    let mut sweeps = 0;
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                offdiag_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = offdiag_norm(&a, n);
    }
    let mut values: Vec<f64> = (0..n).map(|j| a[j * n + j]).collect();
    values.sort_by(f64::total_cmp);
    Ok(OracleSpectrum {
        values,
        iterations: sweeps,
        offdiag_norm: off,
    })
}

/// Annihilates `a[p][q]` with a plane rotation applied from both sides.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

/// `||M v - lambda v||_inf / ((1 + ||M||_inf) ||v||_inf)`.
pub fn residual(m: &DenseSymmetricMatrix, lambda: f64, v: &[Complex64]) -> Result<f64> {
    let vnorm = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if vnorm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mv = m.mul_complex(v);
    let r = mv
        .iter()
        .zip(v)
        .map(|(x, y)| (x - y * lambda).norm())
        .fold(0.0, f64::max);
    Ok(r / ((1.0 + m.norm_inf()) * vnorm))
}

pub fn residual_real(m: &DenseSymmetricMatrix, lambda: f64, v: &[f64]) -> Result<f64> {
    let v: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    residual(m, lambda, &v)
}

/// How many of `values` lie within `eps` of `target`.
pub fn count_near(values: &[f64], target: f64, eps: f64) -> usize {
    values
        .iter()
        .filter(|&&x| (x - target).abs() <= eps)
        .count()
}

/// Counts distinct values, merging neighbours closer than `eps` after sorting.
pub fn count_distinct(values: &[f64], eps: f64) -> usize {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut count = 0;
    let mut last: Option<f64> = None;
    for x in v {
        if last.is_none_or(|l| x - l > eps) {
            count += 1;
        }
        last = Some(x);
    }
    count
}

/// Determinant by LU factorization with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn determinant(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for k in col..n {
                a[r][k] -= f * a[col][k];
            }
        }
    }
    det
}

/// Smallest eigenvalue of the Gram matrix `W^H W` of the given columns, i.e.
/// the square of the smallest singular value of `W`.
///
/// The Hermitian Gram matrix `A + iB` is embedded as the real symmetric
/// `[[A, -B], [B, A]]`, which has the same eigenvalues, each doubled.
pub fn gram_min_eigenvalue(columns: &[Vec<Complex64>]) -> Result<f64> {
    let k = columns.len();
    let mut real = DenseSymmetricMatrix::zeros(2 * k);
    for i in 0..k {
        for j in i..k {
            let g: Complex64 = columns[i]
                .iter()
                .zip(&columns[j])
                .map(|(x, y)| x.conj() * y)
                .sum();
            real.set_sym(i, j, g.re);
            real.set_sym(k + i, k + j, g.re);
            // Off-diagonal blocks: -B at (i, k + j) and B at (k + i, j).
            real.set_sym(i, k + j, -g.im);
            if i != j {
                real.set_sym(j, k + i, g.im);
            }
        }
    }
    let spectrum = jacobi_eigenvalues(&real, None)?;
    Ok(spectrum.values[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineOptimum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping when the bracket is narrower than `xtol`.
pub fn golden_section_maximize<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> LineOptimum
where
    F: FnMut(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evaluations = 2;
    while b - a > xtol && evaluations < 500 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
        evaluations += 1;
    }
    let x = 0.5 * (a + b);
    let value = f(x);
    evaluations += 1;
    let (x, value) = [(x, value), (x1, f1), (x2, f2)]
        .into_iter()
        .max_by(|p, q| p.1.total_cmp(&q.1))
        .unwrap();
    LineOptimum {
        x,
        value,
        evaluations,
    }
}

pub fn golden_section_minimize<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> LineOptimum
where
    F: FnMut(f64) -> f64,
{
    let opt = golden_section_maximize(|x| -f(x), lo, hi, xtol);
    LineOptimum {
        value: -opt.value,
        ..opt
    }
}
