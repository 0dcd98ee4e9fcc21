//! Eigenpairs of an arbitrary circulant matrix via the discrete Fourier basis.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::matrices::CirculantParams;

/// Largest imaginary part tolerated when projecting a symmetric circulant's
/// eigenvalues onto the reals.
pub const REAL_PROJECTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexEigenpair {
    pub value: Complex64,
    pub vector: Vec<Complex64>,
}

/// `omega_n^k` with `omega_n = exp(2 pi i / n)`.
///
/// The exponent is reduced mod `n` first and folded onto the upper half
/// circle, and the quarter and sixth points are returned exactly.
pub fn unit_root(k: usize, n: usize) -> Complex64 {
    assert!(n > 0, "unit_root needs n >= 1");
    let r = k % n;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == n {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == 3 * n {
        return Complex64::new(0.0, -1.0);
    }
    if 2 * r > n {
        return unit_root(n - r, n).conj();
    }
    if 6 * r == n {
        return Complex64::new(0.5, 0.75f64.sqrt());
    }
    if 3 * r == n {
        return Complex64::new(-0.5, 0.75f64.sqrt());
    }
    let angle = 2.0 * PI * r as f64 / n as f64;
    Complex64::new(angle.cos(), angle.sin())
}

/// `cos(2 pi k / n)`, exact at the quarter and sixth points.
pub fn cos_fraction(k: usize, n: usize) -> f64 {
    unit_root(k, n).re
}

/// Fourier vector `[1, omega^k, omega^{2k}, ..., omega^{(n-1)k}]`.
pub fn fourier_vector(k: usize, n: usize) -> Vec<Complex64> {
    (0..n).map(|j| unit_root(j * k % n, n)).collect()
}

/// Returns the `n` eigenpairs `(sum_j c_j omega^{jk}, v_k)`, `k = 0..n`.
pub fn circulant_eigenpairs(p: &CirculantParams) -> Vec<ComplexEigenpair> {
    let n = p.order();
    (0..n)
        .map(|k| {
            let value = p
                .row()
                .iter()
                .enumerate()
                .map(|(j, &c)| unit_root(j * k % n, n) * c)
                .sum();
            ComplexEigenpair {
                value,
                vector: fourier_vector(k, n),
            }
        })
        .collect()
}

/// Real eigenvalues of a symmetric circulant, in Fourier order.
///
/// Returns `None` if the row is not symmetric or any imaginary part exceeds
/// [`REAL_PROJECTION_TOL`] relative to the row magnitude.
pub fn symmetric_circulant_eigenvalues(p: &CirculantParams) -> Option<Vec<f64>> {
    if !p.is_symmetric() {
        return None;
    }
    let scale = 1.0 + p.row().iter().map(|x| x.abs()).sum::<f64>();
    circulant_eigenpairs(p)
        .into_iter()
        .map(|e| (e.value.im.abs() <= REAL_PROJECTION_TOL * scale).then_some(e.value.re))
        .collect()
}
