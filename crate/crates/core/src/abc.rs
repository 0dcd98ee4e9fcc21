//! Closed-form eigenpairs of the regular abc matrix `m_n(a, b, c)` and the
//! structure of its spectrum: pairing of the tire eigenvalues, crossing
//! abscissas and cardinality.
//!
//! With `h = -nc` and `s = c + 2a` (the row sum of the tire block) the two
//! eigenvalues with a constant tire part are the roots of the 2x2 problem
//! `(h - x)(s - x) = n b^2`, i.e.
//!
//! ```text
//! Delta    = (2a + (n+1)c)^2 + 4 n b^2
//! lambda_± = (2a - (n-1)c ± sqrt(Delta)) / 2,   w_± = [beta_±, 1, ..., 1]
//! beta_±   = -(2a + (n+1)c ∓ sqrt(Delta)) / (2b)
//! ```
//!
//! and every non-constant Fourier mode of the tire gives
//! `lambda_k = c + 2a cos(2 pi k / n)` with `w_k = [0, 1, omega^k, ...]`.

use num_complex::Complex64;
use serde::Serialize;

use crate::arrowhead::bordered_pair;
use crate::circulant::{cos_fraction, fourier_vector};
use crate::error::{Error, Result};
use crate::matrices::AbcParams;

/// Which closed-form eigenvalue a number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenLabel {
    Minus,
    Plus,
    /// Tire mode `k` in `1..n`.
    Tire(usize),
}

impl std::fmt::Display for EigenLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EigenLabel::Minus => f.write_str("lambda_minus"),
            EigenLabel::Plus => f.write_str("lambda_plus"),
            EigenLabel::Tire(k) => write!(f, "lambda_{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbcSpectrum {
    pub params: AbcParams,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    pub beta_minus: f64,
    pub beta_plus: f64,
    pub discriminant: f64,
    /// `lambda_k[k - 1]` holds `lambda_k` for `k = 1..n`.
    pub lambda_k: Vec<f64>,
    /// Number of equal pairs `lambda_k == lambda_{n-k}`, `floor((n-1)/2)`.
    pub p: usize,
    /// `floor(n/2)`.
    pub q: usize,
}

impl AbcSpectrum {
    pub fn tire(&self, k: usize) -> f64 {
        self.lambda_k[k - 1]
    }

    pub fn value(&self, label: EigenLabel) -> f64 {
        match label {
            EigenLabel::Minus => self.lambda_minus,
            EigenLabel::Plus => self.lambda_plus,
            EigenLabel::Tire(k) => self.tire(k),
        }
    }

    /// `(lambda_-, lambda_+, lambda_1, ..., lambda_{n-1})` with labels.
    pub fn labeled_values(&self) -> Vec<(EigenLabel, f64)> {
        let mut v = vec![
            (EigenLabel::Minus, self.lambda_minus),
            (EigenLabel::Plus, self.lambda_plus),
        ];
        v.extend(
            self.lambda_k
                .iter()
                .enumerate()
                .map(|(i, &x)| (EigenLabel::Tire(i + 1), x)),
        );
        v
    }

    pub fn values(&self) -> Vec<f64> {
        self.labeled_values().into_iter().map(|(_, x)| x).collect()
    }

    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v = self.values();
        v.sort_by(f64::total_cmp);
        v
    }
}

/// Eigenvalues of `m_n(a, b, c)` for `n >= 2`; `n = 2` goes through
/// [`small_n_spectrum`] and honours the variant.
pub fn abc_spectrum(p: &AbcParams) -> Result<AbcSpectrum> {
    if p.n < 2 {
        return Err(Error::UnsupportedOrder {
            n: p.n,
            reason: "m_1 has nonzero trace; use small_n_spectrum",
        });
    }
    if p.n == 2 {
        return small_n_spectrum(p);
    }
    bordered_spectrum(p)
}

/// Spectra of the `n = 1` and `n = 2` matrices in either convention.
pub fn small_n_spectrum(p: &AbcParams) -> Result<AbcSpectrum> {
    if !(1..=2).contains(&p.n) {
        return Err(Error::UnsupportedOrder {
            n: p.n,
            reason: "small_n_spectrum handles n = 1 and n = 2",
        });
    }
    bordered_spectrum(p)
}

/// Shared by every order: the constant-tire pair from the 2x2 reduction and
/// the tire modes from the Fourier basis.
fn bordered_spectrum(p: &AbcParams) -> Result<AbcSpectrum> {
    if p.b == 0.0 {
        return Err(Error::ZeroBorder);
    }
    let n = p.n;
    let h = p.headpoint();
    let s = p.separation_level();
    let (lambda_minus, lambda_plus, discriminant) = bordered_pair(n, h, p.b, s);
    let (beta_minus, beta_plus) = betas(n, s - h, p.b, discriminant.sqrt());

    let half_weight = p.effective_tire_weight();
    let mut lambda_k = vec![0.0; n.saturating_sub(1)];
    let pairs = (n.max(1) - 1) / 2;
    for k in 1..=pairs {
        let v = p.c + 2.0 * half_weight * cos_fraction(k, n);
        lambda_k[k - 1] = v;
        lambda_k[n - k - 1] = v;
    }
    if n.is_multiple_of(2) {
        lambda_k[n / 2 - 1] = p.c - 2.0 * half_weight;
    }
    Ok(AbcSpectrum {
        params: *p,
        lambda_minus,
        lambda_plus,
        beta_minus,
        beta_plus,
        discriminant,
        lambda_k,
        p: pairs,
        q: n / 2,
    })
}

/// Roots of `b beta^2 + t beta - n b = 0`, whose product is `-n`.
fn betas(n: usize, t: f64, b: f64, root: f64) -> (f64, f64) {
    let n = n as f64;
    if t >= 0.0 {
        let minus = -(t + root) / (2.0 * b);
        (minus, -n / minus)
    } else {
        let plus = (root - t) / (2.0 * b);
        (-n / plus, plus)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbcEigenbasis {
    pub w_minus: Vec<f64>,
    pub w_plus: Vec<f64>,
    /// `w_k[k - 1]` is `[0, 1, omega^k, ..., omega^{(n-1)k}]`.
    pub w_k: Vec<Vec<Complex64>>,
}

impl AbcEigenbasis {
    pub fn vector(&self, label: EigenLabel) -> Vec<Complex64> {
        let real = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        match label {
            EigenLabel::Minus => real(&self.w_minus),
            EigenLabel::Plus => real(&self.w_plus),
            EigenLabel::Tire(k) => self.w_k[k - 1].clone(),
        }
    }
}

pub fn abc_eigenbasis(p: &AbcParams) -> Result<AbcEigenbasis> {
    let spectrum = abc_spectrum(p)?;
    Ok(eigenbasis_of(&spectrum))
}

pub fn eigenbasis_of(spectrum: &AbcSpectrum) -> AbcEigenbasis {
    let n = spectrum.params.n;
    let bordered = |beta: f64| {
        std::iter::once(beta)
            .chain(std::iter::repeat_n(1.0, n))
            .collect()
    };
    let w_k = (1..n)
        .map(|k| {
            std::iter::once(Complex64::new(0.0, 0.0))
                .chain(fourier_vector(k, n))
                .collect()
        })
        .collect();
    AbcEigenbasis {
        w_minus: bordered(spectrum.beta_minus),
        w_plus: bordered(spectrum.beta_plus),
        w_k,
    }
}

/// Abscissas `c_k`, `k = 1..=floor(n/2)`, at which `lambda_k(c)` meets
/// `lambda_-(c)` (for `a > 0`) or `lambda_+(c)` (for `a < 0`) when `|b| = 1`.
///
/// For `n = 2` this is the doubled matrix; the tilde matrix with weight `a`
/// corresponds to `crossing_abscissas(2, a / 2)`.
pub fn crossing_abscissas(n: usize, a: f64) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::UnsupportedOrder {
            n,
            reason: "crossings need a tire of at least two vertices",
        });
    }
    if a == 0.0 {
        return Err(Error::ZeroTire);
    }
    let nf = n as f64;
    Ok((1..=n / 2)
        .map(|k| {
            let x = cos_fraction(k, n);
            (4.0 * a * a * x * (1.0 - x) + nf) / (2.0 * (nf + 1.0) * a * (x - 1.0))
        })
        .collect())
}

/// Relative tolerance deciding that `c` sits on a crossing abscissa.
pub const CROSSING_RTOL: f64 = 1e-9;

pub fn crossing_tolerance(c: f64) -> f64 {
    CROSSING_RTOL * (1.0 + c.abs())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
    pub members: Vec<EigenLabel>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityProfile {
    /// Distinct eigenvalues, ascending.
    pub groups: Vec<EigenGroup>,
    /// Tire modes `k <= floor(n/2)` whose crossing abscissa matched `c`.
    pub crossings_hit: Vec<usize>,
    /// Set when `c` matched more than one crossing abscissa at once. The
    /// cardinality formula assumes at most one, so callers should treat
    /// the count as a tolerance artefact or a genuine coincidence.
    pub coincident_crossings: bool,
}

impl MultiplicityProfile {
    pub fn cardinality(&self) -> usize {
        self.groups.len()
    }

    /// Sorted multiplicities, e.g. `[1, 1, 1, 2, 2]`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<_> = self.groups.iter().map(|g| g.multiplicity).collect();
        m.sort_unstable();
        m
    }
}

/// Groups the closed-form spectrum into distinct values using structural
/// identities only: `lambda_k = lambda_{n-k}` always, `lambda_k = c` for every
/// `k` when the tire weight vanishes, and `lambda_k = lambda_∓` exactly when
/// `c / b` is within [`crossing_tolerance`] of `c_k(n, a / b)`.
pub fn multiplicity_profile(p: &AbcParams) -> Result<MultiplicityProfile> {
    let spectrum = if p.n == 1 {
        small_n_spectrum(p)?
    } else {
        abc_spectrum(p)?
    };
    let n = p.n;
    let mut groups = vec![
        EigenGroup {
            value: spectrum.lambda_minus,
            multiplicity: 1,
            members: vec![EigenLabel::Minus],
        },
        EigenGroup {
            value: spectrum.lambda_plus,
            multiplicity: 1,
            members: vec![EigenLabel::Plus],
        },
    ];
    let mut crossings_hit = Vec::new();
    let weight = p.effective_tire_weight();

    if n >= 2 && weight == 0.0 {
        groups.push(EigenGroup {
            value: p.c,
            multiplicity: n - 1,
            members: (1..n).map(EigenLabel::Tire).collect(),
        });
    } else if n >= 2 {
        let c_norm = p.c / p.b;
        let crossings = crossing_abscissas(n, weight / p.b)?;
        let tol = crossing_tolerance(c_norm);
        // A positive tire weight keeps every lambda_k below c + 2a, so only
        // lambda_- can be met; a negative one only lambda_+.
        let target = if weight > 0.0 { 0 } else { 1 };
        for (i, &ck) in crossings.iter().enumerate() {
            let k = i + 1;
            let members: Vec<_> = if 2 * k == n {
                vec![EigenLabel::Tire(k)]
            } else {
                vec![EigenLabel::Tire(k), EigenLabel::Tire(n - k)]
            };
            if (c_norm - ck).abs() <= tol {
                crossings_hit.push(k);
                groups[target].multiplicity += members.len();
                groups[target].members.extend(members);
            } else {
                groups.push(EigenGroup {
                    value: spectrum.tire(k),
                    multiplicity: members.len(),
                    members,
                });
            }
        }
    }
    groups.sort_by(|x, y| x.value.total_cmp(&y.value));
    let coincident_crossings = crossings_hit.len() > 1;
    Ok(MultiplicityProfile {
        groups,
        crossings_hit,
        coincident_crossings,
    })
}

/// Number of distinct eigenvalues of `m_n(a, b, c)`, from [`multiplicity_profile`].
///
/// For `n >= 3`, `a != 0` this is `floor(n/2) + 1` on a crossing abscissa and
/// `floor(n/2) + 2` elsewhere; for `a = 0` it is `min(n + 1, 3)`.
pub fn spectrum_cardinality(p: &AbcParams) -> Result<usize> {
    multiplicity_profile(p).map(|m| m.cardinality())
}

/// `lambda_lim = c - 2a`, the bound of the tire family.
pub fn limit_level(p: &AbcParams) -> f64 {
    p.c - 2.0 * p.effective_tire_weight()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::SmallOrderVariant;

    const SQRT10: f64 = 3.162_277_660_168_379_5;

    fn m(n: usize, a: f64, b: f64, c: f64) -> AbcParams {
        AbcParams::new(n, a, b, c).unwrap()
    }

    #[test]
    fn m6_spectrum() {
        let s = abc_spectrum(&m(6, 2.0, 1.0, 0.0)).unwrap();
        assert_eq!(s.discriminant, 40.0);
        assert!((s.lambda_plus - (2.0 + SQRT10)).abs() < 1e-15);
        assert!((s.lambda_minus - (2.0 - SQRT10)).abs() < 1e-15);
        let expected = [2.0, -2.0, -4.0, -2.0, 2.0];
        for (got, want) in s.lambda_k.iter().zip(expected) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert_eq!(s.tire(3), -4.0);
        assert_eq!((s.p, s.q), (2, 3));
    }

    #[test]
    fn m6_betas() {
        let p = m(6, 2.0, 1.0, 0.0);
        let s = abc_spectrum(&p).unwrap();
        assert!((s.beta_plus - (-2.0 + SQRT10)).abs() < 1e-15);
        assert!((s.beta_minus - (-2.0 - SQRT10)).abs() < 1e-15);
        for (beta, lambda) in [(s.beta_minus, s.lambda_minus), (s.beta_plus, s.lambda_plus)] {
            assert!((p.b * beta + 2.0 * p.a + p.c - lambda).abs() < 1e-14);
        }
    }

    #[test]
    fn betas_with_negative_border() {
        let p = m(5, 0.7, -2.5, 1.3);
        let s = abc_spectrum(&p).unwrap();
        for (beta, lambda) in [(s.beta_minus, s.lambda_minus), (s.beta_plus, s.lambda_plus)] {
            assert!((p.b * beta + 2.0 * p.a + p.c - lambda).abs() < 1e-13);
        }
        assert!((s.beta_minus * s.beta_plus + 5.0).abs() < 1e-13);
    }

    #[test]
    fn zero_tire_reduces_to_arrowhead() {
        use crate::arrowhead::arrowhead_eigenvalues;
        use crate::matrices::ArrowheadParams;
        for n in 3..10 {
            let p = m(n, 0.0, 1.5, -0.8);
            let s = abc_spectrum(&p).unwrap();
            assert!(s.lambda_k.iter().all(|&x| x == p.c));
            let ah =
                arrowhead_eigenvalues(&ArrowheadParams::new(n, p.headpoint(), p.b, p.c).unwrap());
            assert_eq!(
                (s.lambda_minus, s.lambda_plus),
                (ah.lambda_minus, ah.lambda_plus)
            );
        }
    }

    #[test]
    fn small_orders() {
        let t1 = AbcParams::with_variant(1, 9.0, 3.0, 4.0, SmallOrderVariant::Tilde).unwrap();
        let s = small_n_spectrum(&t1).unwrap();
        assert_eq!((s.lambda_minus, s.lambda_plus), (-5.0, 5.0));
        assert!(s.lambda_k.is_empty());

        let t2 = AbcParams::with_variant(2, 1.0, 1.0, 0.0, SmallOrderVariant::Tilde).unwrap();
        let s = small_n_spectrum(&t2).unwrap();
        assert_eq!(s.sorted_values(), vec![-1.0, -1.0, 2.0]);

        let d2 = AbcParams::with_variant(2, 1.0, 1.0, 1.0, SmallOrderVariant::Doubled).unwrap();
        let s = small_n_spectrum(&d2).unwrap();
        assert_eq!(s.discriminant, 33.0);
        assert!((s.lambda_plus - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((s.lambda_minus - (1.0 - 33f64.sqrt()) / 2.0).abs() < 1e-15);
        assert_eq!(s.lambda_k, vec![-1.0]);
        assert_eq!(abc_spectrum(&d2).unwrap(), s);

        // m_1 doubled is the arrowhead A_1(-c, b, c + 2a).
        let d1 = AbcParams::with_variant(1, 0.5, 1.0, 2.0, SmallOrderVariant::Doubled).unwrap();
        let s = small_n_spectrum(&d1).unwrap();
        assert!((s.lambda_minus + s.lambda_plus - 1.0).abs() < 1e-15);
        assert!((s.lambda_minus * s.lambda_plus - (-2.0 * 3.0 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn tilde_single_eigenvalue_point() {
        // c = (a^2 - b^2) / (3a) collapses the spectrum to {s, -s/2}.
        for (a, b) in [(1.0, 1.0), (2.0, 0.5), (-1.5, 2.0)] {
            let c = (a * a - b * b) / (3.0 * a);
            let s = 2.0 * (2.0 * a * a + b * b) / (3.0 * a);
            let p = AbcParams::with_variant(2, a, b, c, SmallOrderVariant::Tilde).unwrap();
            let prof = multiplicity_profile(&p).unwrap();
            assert_eq!(prof.cardinality(), 2, "a={a} b={b}");
            let single = prof.groups.iter().find(|g| g.multiplicity == 1).unwrap();
            let double = prof.groups.iter().find(|g| g.multiplicity == 2).unwrap();
            assert!((single.value - s).abs() < 1e-12);
            assert!((double.value + s / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(abc_spectrum(&m(5, 1.0, 0.0, 1.0)), Err(Error::ZeroBorder));
        assert!(matches!(
            abc_spectrum(&m(1, 1.0, 1.0, 1.0)),
            Err(Error::UnsupportedOrder { n: 1, .. })
        ));
        assert!(matches!(
            small_n_spectrum(&m(3, 1.0, 1.0, 1.0)),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert_eq!(crossing_abscissas(6, 0.0), Err(Error::ZeroTire));
    }

    #[test]
    fn eigenbasis_shape() {
        let b = abc_eigenbasis(&m(6, 2.0, 1.0, 0.0)).unwrap();
        assert!((b.w_plus[0] - (-2.0 + SQRT10)).abs() < 1e-15);
        assert!(b.w_plus[1..].iter().all(|&x| x == 1.0));
        assert_eq!(b.w_k.len(), 5);
        assert!(b.w_k.iter().all(|w| w[0] == Complex64::new(0.0, 0.0)));
        let w3: Vec<f64> = b.w_k[2].iter().map(|z| z.re).collect();
        assert_eq!(w3, vec![0.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0]);
        assert!(b.w_k[2].iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn crossing_examples() {
        let cs = crossing_abscissas(6, 2.0).unwrap();
        assert_eq!(cs.len(), 3);
        assert!((cs[0] + 5.0 / 7.0).abs() < 1e-15);
        assert!((cs[1] - 1.0 / 7.0).abs() < 1e-15);
        assert!((cs[2] - 13.0 / 28.0).abs() < 1e-15);
        // k = n/2 reproduces the transition abscissa (8a^2 - n) / (4(n+1)a).
        for n in [4usize, 6, 10, 20] {
            for a in [-3.0, -0.4, 0.2, 1.7] {
                let nf = n as f64;
                let last = *crossing_abscissas(n, a).unwrap().last().unwrap();
                let trans = (8.0 * a * a - nf) / (4.0 * (nf + 1.0) * a);
                assert!((last - trans).abs() <= 1e-13 * (1.0 + trans.abs()));
            }
        }
    }

    #[test]
    fn crossings_meet_the_bordered_pair() {
        let cs = crossing_abscissas(6, 2.0).unwrap();
        for (i, &c) in cs.iter().enumerate() {
            let s = abc_spectrum(&m(6, 2.0, 1.0, c)).unwrap();
            assert!((s.tire(i + 1) - s.lambda_minus).abs() < 1e-10);
        }
        let cs = crossing_abscissas(7, -1.3).unwrap();
        for (i, &c) in cs.iter().enumerate() {
            let s = abc_spectrum(&m(7, -1.3, -1.0, c)).unwrap();
            assert!((s.tire(i + 1) - s.lambda_plus).abs() < 1e-10);
        }
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(spectrum_cardinality(&m(6, 2.0, 1.0, 0.0)), Ok(5));
        assert_eq!(spectrum_cardinality(&m(6, 2.0, 1.0, 13.0 / 28.0)), Ok(4));
        assert_eq!(spectrum_cardinality(&m(5, 0.0, 1.0, 1.0)), Ok(3));
        assert_eq!(spectrum_cardinality(&m(2, 0.0, 1.0, 1.0)), Ok(3));
        assert_eq!(
            spectrum_cardinality(
                &AbcParams::with_variant(1, 0.0, 1.0, 1.0, SmallOrderVariant::Tilde).unwrap()
            ),
            Ok(2)
        );
    }

    #[test]
    fn profile_examples() {
        let prof = multiplicity_profile(&m(6, 2.0, 1.0, 0.0)).unwrap();
        assert_eq!(prof.multiplicities(), vec![1, 1, 1, 2, 2]);
        let values: Vec<f64> = prof.groups.iter().map(|g| g.value).collect();
        let want = [-4.0, -2.0, 2.0 - SQRT10, 2.0, 2.0 + SQRT10];
        for (g, w) in values.iter().zip(want) {
            assert!((g - w).abs() < 1e-14);
        }
        assert_eq!(prof.groups[0].members, vec![EigenLabel::Tire(3)]);
        assert_eq!(
            prof.groups[1].members,
            vec![EigenLabel::Tire(2), EigenLabel::Tire(4)]
        );

        let prof = multiplicity_profile(&m(5, 1.0, 1.0, 0.0)).unwrap();
        assert_eq!(prof.multiplicities(), vec![1, 1, 2, 2]);

        let prof = multiplicity_profile(&m(6, 2.0, 1.0, 13.0 / 28.0)).unwrap();
        assert_eq!(prof.multiplicities(), vec![1, 2, 2, 2]);
        assert_eq!(prof.crossings_hit, vec![3]);

        let prof = multiplicity_profile(&m(6, 2.0, 1.0, -5.0 / 7.0)).unwrap();
        assert_eq!(prof.multiplicities(), vec![1, 1, 2, 3]);
        let triple = prof.groups.iter().find(|g| g.multiplicity == 3).unwrap();
        assert_eq!(
            triple.members,
            vec![EigenLabel::Minus, EigenLabel::Tire(1), EigenLabel::Tire(5)]
        );
    }

    #[test]
    fn profile_odd_crossing() {
        // Odd n on a crossing: one single, (n-3)/2 doubles, one triple.
        let cs = crossing_abscissas(9, 1.0).unwrap();
        let prof = multiplicity_profile(&m(9, 1.0, 1.0, cs[1])).unwrap();
        assert_eq!(prof.multiplicities(), vec![1, 2, 2, 2, 3]);
        assert_eq!(prof.cardinality(), 9 / 2 + 1);
    }

    #[test]
    fn profile_follows_border_sign() {
        // With b = -1 the crossing condition is c/b = c_k(n, a/b).
        let cs = crossing_abscissas(6, -2.0).unwrap();
        let p = m(6, 2.0, -1.0, -cs[0]);
        let prof = multiplicity_profile(&p).unwrap();
        assert_eq!(prof.crossings_hit, vec![1]);
        let s = abc_spectrum(&p).unwrap();
        assert!((s.tire(1) - s.lambda_minus).abs() < 1e-10);
    }
}
