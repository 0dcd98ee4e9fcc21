//! Closed-form spectrum of the regular arrowhead matrix `A_n(h, b, d)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::ArrowheadParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArrowheadSpectrum {
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// The diagonal value `d`, an eigenvalue of multiplicity `n - 1`.
    pub lambda_d: f64,
    pub multiplicity_d: usize,
    pub discriminant: f64,
}

impl ArrowheadSpectrum {
    /// All `n + 1` eigenvalues in ascending order.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v = vec![self.lambda_minus, self.lambda_plus];
        v.extend(std::iter::repeat_n(self.lambda_d, self.multiplicity_d));
        v.sort_by(f64::total_cmp);
        v
    }
}

/// Roots `(lambda_-, lambda_+)` of `(h - x)(d - x) - n b^2 = 0`.
///
/// The larger-magnitude root is taken from `(h + d +- sqrt(disc)) / 2` with the
/// sign of `h + d`; the other comes from the product `h d - n b^2`, so nothing
/// cancels when `disc` dwarfs `(h + d)^2` or the reverse.
pub(crate) fn bordered_pair(n: usize, h: f64, b: f64, d: f64) -> (f64, f64, f64) {
    let hd = h - d;
    let disc = hd * hd + 4.0 * n as f64 * b * b;
    let root = disc.sqrt();
    let sum = h + d;
    let product = h * d - n as f64 * b * b;
    let (minus, plus) = if sum >= 0.0 {
        let plus = 0.5 * (sum + root);
        let minus = if plus != 0.0 {
            product / plus
        } else {
            0.5 * (sum - root)
        };
        (minus, plus)
    } else {
        let minus = 0.5 * (sum - root);
        (minus, product / minus)
    };
    (minus, plus, disc)
}

pub fn arrowhead_eigenvalues(p: &ArrowheadParams) -> ArrowheadSpectrum {
    let (lambda_minus, lambda_plus, discriminant) = bordered_pair(p.n, p.h, p.b, p.d);
    ArrowheadSpectrum {
        lambda_minus,
        lambda_plus,
        lambda_d: p.d,
        multiplicity_d: p.n - 1,
        discriminant,
    }
}

/// Number of distinct eigenvalues: 2 for `n = 1`, 3 otherwise.
///
/// With `b != 0` the discriminant strictly exceeds `(h - d)^2`, so `d` never
/// coincides with either root.
pub fn arrowhead_spectrum_cardinality(p: &ArrowheadParams) -> Result<usize> {
    if p.b == 0.0 {
        return Err(Error::ZeroBorder);
    }
    Ok(if p.n == 1 { 2 } else { 3 })
}
