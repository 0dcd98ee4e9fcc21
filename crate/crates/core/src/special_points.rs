//! Uppermost, lowermost and transition points of the eigenlines at `|b| = 1`,
//! the piecewise extreme eigenvalues they induce, and the max-of-min /
//! min-of-max extrema with their degeneracy.
//!
//! Everything is parameterized by the effective tire weight `a'` (see
//! [`AbcParams::effective_tire_weight`]), so the tilde `n = 2` matrix is handled
//! by replacing `2a` with `a` throughout.

use serde::Serialize;

use crate::abc::{abc_spectrum, crossing_abscissas, small_n_spectrum, AbcSpectrum, EigenLabel};
use crate::error::{Error, Result};
use crate::matrices::{materialize_abc, AbcParams, SmallOrderVariant};
use crate::oracle::{
    count_near, golden_section_maximize, golden_section_minimize, jacobi_eigenvalues,
};

/// `a = ±1/4`: the transition point meets the uppermost / lowermost point.
pub const CRITICAL_COUPLING: f64 = 0.25;

/// Window used when counting oracle eigenvalues at an extremum.
pub const DEGENERACY_EPS: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub c: f64,
    pub lambda: f64,
}

impl Point {
    pub fn new(c: f64, lambda: f64) -> Self {
        Self { c, lambda }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransitionBranch {
    /// `a > 0`: the transition point lies on `lambda_-`.
    OnLambdaMinus,
    /// `a < 0`: it lies on `lambda_+`.
    OnLambdaPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    BelowCriticalNeg,
    CriticalNeg,
    NegSmall,
    ZeroTire,
    PosSmall,
    CriticalPos,
    AboveCriticalPos,
}

impl Regime {
    pub fn classify(a: f64) -> Regime {
        use std::cmp::Ordering::*;
        match (
            a.total_cmp(&-CRITICAL_COUPLING),
            a.total_cmp(&0.0),
            a.total_cmp(&CRITICAL_COUPLING),
        ) {
            (Less, _, _) => Regime::BelowCriticalNeg,
            (Equal, _, _) => Regime::CriticalNeg,
            (_, Less, _) => Regime::NegSmall,
            (_, Equal, _) => Regime::ZeroTire,
            (_, _, Less) => Regime::PosSmall,
            (_, _, Equal) => Regime::CriticalPos,
            _ => Regime::AboveCriticalPos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpecialPoints {
    pub n: usize,
    pub a: f64,
    pub variant: SmallOrderVariant,
    pub uppermost: Point,
    pub lowermost: Point,
    pub transition: Option<Point>,
    pub transition_branch: Option<TransitionBranch>,
    pub limit_transition: Option<Point>,
    pub regime: Regime,
    /// The transition point is an actual branch switch of the extreme
    /// eigenvalues only for even `n`.
    pub closed_form_extremes: bool,
}

impl SpecialPoints {
    pub fn transition(&self) -> Result<Point> {
        self.transition.ok_or(Error::ZeroTire)
    }
}

pub fn uppermost(n: usize, a: f64) -> Point {
    let nf = n as f64;
    Point::new(
        -((nf - 1.0) + 2.0 * a) / (nf + 1.0),
        2.0 * nf * (a - 1.0) / (nf + 1.0),
    )
}

pub fn lowermost(n: usize, a: f64) -> Point {
    let nf = n as f64;
    Point::new(
        ((nf - 1.0) - 2.0 * a) / (nf + 1.0),
        2.0 * nf * (a + 1.0) / (nf + 1.0),
    )
}

pub fn transition_point(n: usize, a: f64) -> Result<Point> {
    if a == 0.0 {
        return Err(Error::ZeroTire);
    }
    let nf = n as f64;
    let denom = 4.0 * (nf + 1.0) * a;
    Ok(Point::new(
        (8.0 * a * a - nf) / denom,
        -nf * (8.0 * a * a + 1.0) / denom,
    ))
}

/// `T_inf(a) = -(1, 8a^2 + 1) / (4a)`, the `n -> inf` limit of the transition point.
pub fn limit_transition_point(a: f64) -> Result<Point> {
    if a == 0.0 {
        return Err(Error::ZeroTire);
    }
    Ok(Point::new(
        -1.0 / (4.0 * a),
        -(8.0 * a * a + 1.0) / (4.0 * a),
    ))
}

/// The curve `lambda = c + 1/(2c)` traced by the limit transition points.
pub fn limit_transition_curve(c: f64) -> Result<f64> {
    if c == 0.0 {
        return Err(Error::ZeroAbscissa);
    }
    Ok(c + 1.0 / (2.0 * c))
}

/// Special points of the doubled-convention family `m_n(a, ±1, c)`.
pub fn special_points(n: usize, a: f64) -> Result<SpecialPoints> {
    special_points_for(n, a, SmallOrderVariant::Doubled)
}

pub fn special_points_for(n: usize, a: f64, variant: SmallOrderVariant) -> Result<SpecialPoints> {
    if n < 2 {
        return Err(Error::UnsupportedOrder {
            n,
            reason: "special points need n >= 2",
        });
    }
    let weight = AbcParams {
        n,
        a,
        b: 1.0,
        c: 0.0,
        variant,
    }
    .effective_tire_weight();
    let transition = transition_point(n, weight).ok();
    let transition_branch = match weight.total_cmp(&0.0) {
        std::cmp::Ordering::Greater => Some(TransitionBranch::OnLambdaMinus),
        std::cmp::Ordering::Less => Some(TransitionBranch::OnLambdaPlus),
        std::cmp::Ordering::Equal => None,
    };
    Ok(SpecialPoints {
        n,
        a,
        variant,
        uppermost: uppermost(n, weight),
        lowermost: lowermost(n, weight),
        transition,
        transition_branch,
        limit_transition: limit_transition_point(weight).ok(),
        regime: Regime::classify(weight),
        closed_form_extremes: n.is_multiple_of(2),
    })
}

/// Solves `c_upp(a, n) = c_trans(a, n)` (for `sign > 0`) or
/// `c_low(a, n) = c_trans(a, n)` (for `sign < 0`) by bisection.
pub fn solve_critical_coupling(n: usize, sign: f64) -> f64 {
    let gap = |a: f64| {
        let t = transition_point(n, a).expect("a != 0 inside the bracket").c;
        if sign > 0.0 {
            uppermost(n, a).c - t
        } else {
            lowermost(n, a).c - t
        }
    };
    let s = if sign > 0.0 { 1.0 } else { -1.0 };
    let (mut lo, mut hi) = (s * 1e-6, s * 1e3);
    let mut g_lo = gap(lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let g = gap(mid);
        if g == 0.0 {
            return mid;
        }
        if (g > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
    }
    if gap(lo).abs() <= gap(hi).abs() {
        lo
    } else {
        hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremeBranch {
    LambdaMinus,
    LambdaPlus,
    /// `lambda_{n/2} = c - 2a` for even `n`.
    LambdaHalf,
    /// Extreme tire value `lambda_q` for odd `n`.
    LambdaQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremeEigenvalues {
    pub c: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub active_branch_min: ExtremeBranch,
    pub active_branch_max: ExtremeBranch,
    /// False when the brute-force comparison was used (odd `n` or `|b| != 1`).
    pub closed_form: bool,
}

/// Relative width of the band around `c_trans` that counts as the transition.
pub const TRANSITION_CTOL: f64 = 1e-12;

/// Relative width of the band in which two eigenvalues count as tied in the
/// brute-force comparison.
pub const BRANCH_TIE_RTOL: f64 = 1e-12;

fn spectrum_any(p: &AbcParams) -> Result<AbcSpectrum> {
    if p.n == 1 {
        small_n_spectrum(p)
    } else {
        abc_spectrum(p)
    }
}

/// Smallest and largest eigenvalue of `m_n(a, b, c)` at the parameter's `c`.
///
/// For even `n` and `|b| = 1` the branch follows the piecewise closed form:
/// for `a > 0` the minimum is `c - 2a` up to `c_trans` and `lambda_-` after it
/// while the maximum is `lambda_+`; `a < 0` mirrors this; `a = 0` gives
/// `lambda_∓`. Otherwise every value is compared directly.
pub fn extreme_eigenvalues(p: &AbcParams) -> Result<ExtremeEigenvalues> {
    let spectrum = spectrum_any(p)?;
    if !p.n.is_multiple_of(2) || p.b.abs() != 1.0 {
        return Ok(brute_force_extremes(&spectrum));
    }
    let weight = p.effective_tire_weight();
    let half = spectrum.tire(p.n / 2);
    let mut out = ExtremeEigenvalues {
        c: p.c,
        lambda_min: spectrum.lambda_minus,
        lambda_max: spectrum.lambda_plus,
        active_branch_min: ExtremeBranch::LambdaMinus,
        active_branch_max: ExtremeBranch::LambdaPlus,
        closed_form: true,
    };
    if weight != 0.0 {
        let c_trans = transition_point(p.n, weight)?.c;
        let band = TRANSITION_CTOL * (1.0 + p.c.abs());
        if weight > 0.0 && p.c <= c_trans + band {
            out.lambda_min = half;
            out.active_branch_min = ExtremeBranch::LambdaHalf;
        } else if weight < 0.0 && p.c >= c_trans - band {
            out.lambda_max = half;
            out.active_branch_max = ExtremeBranch::LambdaHalf;
        }
    }
    Ok(out)
}

/// Direct min / max over the `n + 1` closed-form values. Near-ties between a
/// tire value and `lambda_∓` resolve to the tire branch.
pub fn brute_force_extremes(spectrum: &AbcSpectrum) -> ExtremeEigenvalues {
    let n = spectrum.params.n;
    let labeled = spectrum.labeled_values();
    let pick = |better: fn(f64, f64) -> bool| {
        let best = labeled
            .iter()
            .map(|&(_, x)| x)
            .reduce(|m, x| if better(x, m) { x } else { m })
            .unwrap();
        let tol = BRANCH_TIE_RTOL * (1.0 + best.abs());
        let tire = labeled
            .iter()
            .filter(|(l, x)| matches!(l, EigenLabel::Tire(_)) && (x - best).abs() <= tol)
            .reduce(|u, v| if better(v.1, u.1) { v } else { u });
        match tire {
            Some(&(EigenLabel::Tire(k), x)) => (
                x,
                if 2 * k == n {
                    ExtremeBranch::LambdaHalf
                } else {
                    ExtremeBranch::LambdaQ
                },
            ),
            _ => {
                let &(label, x) = labeled.iter().find(|&&(_, x)| x == best).unwrap();
                (
                    x,
                    if label == EigenLabel::Minus {
                        ExtremeBranch::LambdaMinus
                    } else {
                        ExtremeBranch::LambdaPlus
                    },
                )
            }
        }
    };
    let (lambda_min, active_branch_min) = pick(|x, m| x < m);
    let (lambda_max, active_branch_max) = pick(|x, m| x > m);
    ExtremeEigenvalues {
        c: spectrum.params.c,
        lambda_min,
        lambda_max,
        active_branch_min,
        active_branch_max,
        closed_form: false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Configuration {
    Collinear,
    Coplanar,
    Spatial,
}

/// Degeneracy 1, 2, 3 of the ground-state eigenvalue maps to a collinear,
/// coplanar or spatial spin configuration.
pub fn classify_configuration(degeneracy: usize) -> Result<Configuration> {
    match degeneracy {
        1 => Ok(Configuration::Collinear),
        2 => Ok(Configuration::Coplanar),
        3 => Ok(Configuration::Spatial),
        d => Err(Error::UnsupportedDegeneracy(d)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremumKind {
    MinOfMax,
    MaxOfMin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DegeneracySource {
    ClosedForm,
    /// Counted from the dense eigensolver (critical couplings).
    Oracle,
    /// Counted among the closed-form values at a numerically located optimum.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremeExtremum {
    pub location: Point,
    pub kind: ExtremumKind,
    pub degeneracy: usize,
    /// `None` when the degeneracy exceeds 3.
    pub configuration: Option<Configuration>,
    /// At the transition point; for the numeric fallback, at any point where
    /// two branches meet.
    pub at_transition: bool,
    pub degeneracy_source: DegeneracySource,
}

/// `min_c lambda_max(c)` and `max_c lambda_min(c)` for even `n`, `|b| = 1`.
///
/// Returns `(min_of_max, max_of_min)`.
pub fn extreme_extrema(n: usize, a: f64) -> Result<(ExtremeExtremum, ExtremeExtremum)> {
    extreme_extrema_for(n, a, SmallOrderVariant::Doubled)
}

pub fn extreme_extrema_for(
    n: usize,
    a: f64,
    variant: SmallOrderVariant,
) -> Result<(ExtremeExtremum, ExtremeExtremum)> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::UnsupportedOrder {
            n,
            reason: "closed-form extrema need an even n >= 2",
        });
    }
    let sp = special_points_for(n, a, variant)?;
    let weight = AbcParams {
        n,
        a,
        b: 1.0,
        c: 0.0,
        variant,
    }
    .effective_tire_weight();

    let build =
        |kind, at_transition: bool, location: Point, critical: bool| -> Result<ExtremeExtremum> {
            let (degeneracy, degeneracy_source) = if critical {
                let m = materialize_abc(&AbcParams {
                    n,
                    a,
                    b: 1.0,
                    c: location.c,
                    variant,
                });
                let values = jacobi_eigenvalues(&m, None)?.values;
                (
                    count_near(&values, location.lambda, DEGENERACY_EPS),
                    DegeneracySource::Oracle,
                )
            } else if at_transition {
                (2, DegeneracySource::ClosedForm)
            } else {
                (1, DegeneracySource::ClosedForm)
            };
            Ok(ExtremeExtremum {
                location,
                kind,
                degeneracy,
                configuration: classify_configuration(degeneracy).ok(),
                at_transition,
                degeneracy_source,
            })
        };

    let min_of_max = if weight <= -CRITICAL_COUPLING {
        build(
            ExtremumKind::MinOfMax,
            true,
            sp.transition()?,
            weight == -CRITICAL_COUPLING,
        )?
    } else {
        build(ExtremumKind::MinOfMax, false, sp.lowermost, false)?
    };
    let max_of_min = if weight >= CRITICAL_COUPLING {
        build(
            ExtremumKind::MaxOfMin,
            true,
            sp.transition()?,
            weight == CRITICAL_COUPLING,
        )?
    } else {
        build(ExtremumKind::MaxOfMin, false, sp.uppermost, false)?
    };
    Ok((min_of_max, max_of_min))
}

/// Numeric fallback for any `n >= 2` and `b != 0`: golden-section search of
/// the brute-force extreme eigenvalues over `c`, with the degeneracy counted
/// among the closed-form values at the optimum.
///
/// `lambda_min(c)` is a minimum of concave functions of `c`, hence concave,
/// and `lambda_max(c)` is convex, so both searches are well posed.
pub fn numeric_extreme_extrema(p: &AbcParams) -> Result<(ExtremeExtremum, ExtremeExtremum)> {
    if p.n < 2 {
        return Err(Error::UnsupportedOrder {
            n: p.n,
            reason: "extrema need n >= 2",
        });
    }
    if p.b == 0.0 {
        return Err(Error::ZeroBorder);
    }
    let at = |c: f64| -> Result<(AbcSpectrum, ExtremeEigenvalues)> {
        let s = abc_spectrum(&AbcParams { c, ..*p })?;
        let e = brute_force_extremes(&s);
        Ok((s, e))
    };
    let weight = p.effective_tire_weight() / p.b;
    let mut anchors = vec![uppermost(p.n, weight).c, lowermost(p.n, weight).c];
    if weight != 0.0 {
        anchors.extend(crossing_abscissas(p.n, weight)?);
    }
    let anchors: Vec<f64> = anchors.into_iter().map(|x| x * p.b).collect();
    let lo = anchors.iter().copied().fold(f64::INFINITY, f64::min) - 10.0 * (1.0 + p.b.abs());
    let hi = anchors.iter().copied().fold(f64::NEG_INFINITY, f64::max) + 10.0 * (1.0 + p.b.abs());

    let lower = |c: f64| at(c).map(|(_, e)| e.lambda_min).unwrap_or(f64::NAN);
    let upper = |c: f64| at(c).map(|(_, e)| e.lambda_max).unwrap_or(f64::NAN);
    let max_of_min = golden_section_maximize(lower, lo, hi, 1e-12);
    let min_of_max = golden_section_minimize(upper, lo, hi, 1e-12);

    let build = |kind, opt: crate::oracle::LineOptimum| -> Result<ExtremeExtremum> {
        let (s, _) = at(opt.x)?;
        let degeneracy = count_near(&s.values(), opt.value, DEGENERACY_EPS);
        Ok(ExtremeExtremum {
            location: Point::new(opt.x, opt.value),
            kind,
            degeneracy,
            configuration: classify_configuration(degeneracy).ok(),
            at_transition: degeneracy > 1,
            degeneracy_source: DegeneracySource::Numeric,
        })
    };
    Ok((
        build(ExtremumKind::MinOfMax, min_of_max)?,
        build(ExtremumKind::MaxOfMin, max_of_min)?,
    ))
}
