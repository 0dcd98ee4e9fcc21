//! Randomized comparison of the closed forms against the dense oracle and
//! against their own structural identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abc::{abc_spectrum, eigenbasis_of, EigenLabel};
use crate::error::Result;
use crate::matrices::{materialize_abc, normalize_b, AbcParams};
use crate::oracle::{jacobi_eigenvalues, residual};

/// Residual bound for every analytic eigenpair.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Trace-zero bound, scaled by `(n + 1) max |lambda|`.
pub const TRACE_TOL: f64 = 1e-10;
/// Relative bound for `sigma(m_n(a, b, c)) = b sigma(m_n(a/b, 1, c/b))`.
pub const SCALING_RTOL: f64 = 1e-10;
/// Default bound for the oracle comparison, scaled by `1 + ||M||_inf`.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-9;

/// `trials` parameter sets with `n` in `[3, 64]`, `a, c` in `[-5, 5]` and
/// `b` in `[-3, 3] \ {0}`, reproducible from `seed`.
pub fn random_cases(seed: u64, trials: usize) -> Vec<AbcParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(3..=64);
            let a = rng.gen_range(-5.0..=5.0);
            let c = rng.gen_range(-5.0..=5.0);
            let b = loop {
                let b: f64 = rng.gen_range(-3.0..=3.0);
                if b != 0.0 {
                    break b;
                }
            };
            AbcParams::new(n, a, b, c).expect("n >= 3")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    OracleEquivalence,
    TraceZero,
    Residual,
    Separation,
    Pairing,
    SignOfB,
    Scaling,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OracleEquivalence,
        Suite::TraceZero,
        Suite::Residual,
        Suite::Separation,
        Suite::Pairing,
        Suite::SignOfB,
        Suite::Scaling,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    /// Largest normalized deviation seen (0 for exact suites that held).
    pub worst_deviation: f64,
    pub worst_case: Option<AbcParams>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            passed: 0,
            failed: 0,
            worst_deviation: 0.0,
            worst_case: None,
        }
    }

    fn record(&mut self, p: &AbcParams, deviation: f64, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        if deviation > self.worst_deviation
            || (!ok && self.worst_case.is_none())
            || deviation.is_nan()
        {
            self.worst_deviation = deviation;
            self.worst_case = Some(*p);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub trials: usize,
    pub oracle_tol: f64,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }

    pub fn suite(&self, suite: Suite) -> &SuiteReport {
        self.suites
            .iter()
            .find(|s| s.suite == suite)
            .expect("all suites are run")
    }
}

/// Runs every suite on every case. The oracle comparison uses
/// `oracle_tol * (1 + ||M||_inf)`; the others use the module constants.
pub fn run_suites(cases: &[AbcParams], oracle_tol: f64) -> Result<VerificationReport> {
    let mut reports: Vec<SuiteReport> = Suite::ALL.iter().map(|&s| SuiteReport::new(s)).collect();
    for p in cases {
        let m = materialize_abc(p);
        let spectrum = abc_spectrum(p)?;
        let analytic = spectrum.sorted_values();
        let scale = 1.0 + m.norm_inf();

        let oracle = jacobi_eigenvalues(&m, None)?;
        let dev = analytic
            .iter()
            .zip(&oracle.values)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
            / scale;
        reports[0].record(p, dev, dev <= oracle_tol);

        let max_abs = analytic.iter().map(|x| x.abs()).fold(0.0, f64::max);
        let trace: f64 = spectrum.values().iter().sum();
        let bound = TRACE_TOL * (p.n + 1) as f64 * max_abs;
        reports[1].record(
            p,
            trace.abs() / ((p.n + 1) as f64 * max_abs),
            trace.abs() <= bound,
        );

        let basis = eigenbasis_of(&spectrum);
        let mut worst = 0.0f64;
        for (label, value) in spectrum.labeled_values() {
            worst = worst.max(residual(&m, value, &basis.vector(label))?);
        }
        reports[2].record(p, worst, worst <= RESIDUAL_TOL);

        let sep = p.c + 2.0 * p.a;
        let separated = spectrum.lambda_minus < sep && sep < spectrum.lambda_plus;
        reports[3].record(p, 0.0, separated);

        let n = p.n;
        let paired = (1..n).all(|k| spectrum.tire(k).to_bits() == spectrum.tire(n - k).to_bits());
        reports[4].record(p, 0.0, paired);

        let flipped = abc_spectrum(&AbcParams { b: -p.b, ..*p })?;
        let same = analytic
            .iter()
            .zip(flipped.sorted_values())
            .all(|(x, y)| x.to_bits() == y.to_bits());
        reports[5].record(p, 0.0, same);

        let (factor, normalized) = normalize_b(p)?;
        let mut scaled: Vec<f64> = abc_spectrum(&normalized)?
            .values()
            .iter()
            .map(|x| factor * x)
            .collect();
        scaled.sort_by(f64::total_cmp);
        let dev = analytic
            .iter()
            .zip(&scaled)
            .map(|(x, y)| (x - y).abs() / (1.0 + max_abs))
            .fold(0.0, f64::max);
        reports[6].record(p, dev, dev <= SCALING_RTOL);
    }
    Ok(VerificationReport {
        trials: cases.len(),
        oracle_tol,
        suites: reports,
    })
}

/// Convenience wrapper: generate `trials` cases from `seed` and run the suites.
pub fn verify(trials: usize, seed: u64, oracle_tol: f64) -> Result<VerificationReport> {
    run_suites(&random_cases(seed, trials), oracle_tol)
}

/// Labels of the values compared by the pairing suite, for reporting.
pub fn paired_labels(n: usize) -> Vec<(EigenLabel, EigenLabel)> {
    (1..=(n - 1) / 2)
        .map(|k| (EigenLabel::Tire(k), EigenLabel::Tire(n - k)))
        .collect()
}
