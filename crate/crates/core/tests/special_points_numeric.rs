//! The analysis layer compared with direct sampling of the eigenlines.

use abc_spectra::oracle::{golden_section_maximize, golden_section_minimize};
use abc_spectra::special_points::{brute_force_extremes, lowermost, transition_point, uppermost};
use abc_spectra::*;

fn lam(n: usize, a: f64, c: f64) -> AbcSpectrum {
    abc_spectrum(&AbcParams::new(n, a, 1.0, c).unwrap()).unwrap()
}

fn oracle_values(n: usize, a: f64, c: f64) -> Vec<f64> {
    jacobi_eigenvalues(
        &materialize_abc(&AbcParams::new(n, a, 1.0, c).unwrap()),
        None,
    )
    .unwrap()
    .values
}

#[test]
fn uppermost_is_global_max_of_lambda_minus() {
    for n in [3usize, 6, 11] {
        for a in [-1.0, 0.2, 2.0] {
            let u = uppermost(n, a);
            let l = lowermost(n, a);
            for i in 0..=4000 {
                let c = -40.0 + 0.02 * i as f64;
                let s = lam(n, a, c);
                assert!(s.lambda_minus <= u.lambda + 1e-10, "n={n} a={a} c={c}");
                assert!(s.lambda_plus >= l.lambda - 1e-10, "n={n} a={a} c={c}");
            }
            assert!((lam(n, a, u.c).lambda_minus - u.lambda).abs() < 1e-12);
            assert!((lam(n, a, l.c).lambda_plus - l.lambda).abs() < 1e-12);
        }
    }
}

#[test]
fn lowermost_matches_oracle_minimization() {
    // n = 6, a = 2: L = (1/7, 36/7).
    let opt = golden_section_minimize(
        |c| *oracle_values(6, 2.0, c).last().unwrap(),
        -5.0,
        5.0,
        1e-10,
    );
    assert!((opt.x - 1.0 / 7.0).abs() < 1e-6);
    assert!((opt.value - 36.0 / 7.0).abs() < 1e-10);
}

#[test]
fn transition_points_sit_on_limit_line() {
    for n in 2..40 {
        for a in [-7.0, -1.0, -0.25, -0.01, 0.01, 0.3, 2.0, 11.0] {
            let t = transition_point(n, a).unwrap();
            assert!((t.lambda - t.c + 2.0 * a).abs() <= 1e-12 * (1.0 + t.lambda.abs() + t.c.abs()));
        }
    }
}

#[test]
fn transition_converges_to_limit_point() {
    for a in [-2.0, -0.3, 0.5, 2.0] {
        let lim = special_points::limit_transition_point(a).unwrap();
        let errs: Vec<(f64, f64)> = [10usize, 100, 1000]
            .iter()
            .map(|&n| {
                let t = transition_point(n, a).unwrap();
                ((t.c - lim.c).abs(), (t.lambda - lim.lambda).abs())
            })
            .collect();
        assert!(errs[0].0 > errs[1].0 && errs[1].0 > errs[2].0);
        assert!(errs[0].1 > errs[1].1 && errs[1].1 > errs[2].1);
        assert!(errs[2].0 < 1e-2 && errs[2].1 < 1e-2);
    }
}

#[test]
fn critical_orderings() {
    for n in [3usize, 4, 6, 9, 20] {
        for a in [-3.0, -0.5, -0.26] {
            assert!(transition_point(n, a).unwrap().c < lowermost(n, a).c);
        }
        for a in [-0.24, -0.1, -0.01] {
            assert!(transition_point(n, a).unwrap().c > lowermost(n, a).c);
        }
        for a in [0.01, 0.1, 0.24] {
            assert!(transition_point(n, a).unwrap().c < uppermost(n, a).c);
        }
        for a in [0.26, 0.5, 3.0] {
            assert!(transition_point(n, a).unwrap().c > uppermost(n, a).c);
        }
    }
}

#[test]
fn closed_form_extremes_agree_with_oracle() {
    let e = extreme_eigenvalues(&AbcParams::new(6, 2.0, 1.0, 1.0).unwrap()).unwrap();
    let values = oracle_values(6, 2.0, 1.0);
    assert!((e.lambda_min - values[0]).abs() < 1e-12);
    assert!((e.lambda_min - (-1.0 - 145f64.sqrt()) / 2.0).abs() < 1e-13);
    assert!((e.lambda_max - values[6]).abs() < 1e-12);
}

#[test]
fn negative_border_uses_closed_form_too() {
    for c in [-3.0, 0.0, 0.4637, 2.0] {
        let p = AbcParams::new(6, 2.0, -1.0, c).unwrap();
        let e = extreme_eigenvalues(&p).unwrap();
        let b = brute_force_extremes(&abc_spectrum(&p).unwrap());
        assert!(e.closed_form);
        assert_eq!(
            (e.active_branch_min, e.active_branch_max),
            (b.active_branch_min, b.active_branch_max)
        );
        assert_eq!((e.lambda_min, e.lambda_max), (b.lambda_min, b.lambda_max));
    }
}

#[test]
fn odd_order_extrema_by_search() {
    // For odd n the max of lambda_min is still attained; check the fallback
    // against a search on the oracle.
    for (n, a) in [(5usize, 2.0), (7, 0.1), (9, -2.0)] {
        let (mim, mom) =
            special_points::numeric_extreme_extrema(&AbcParams::new(n, a, 1.0, 0.0).unwrap())
                .unwrap();
        let o_max = golden_section_maximize(|c| oracle_values(n, a, c)[0], -30.0, 30.0, 1e-11);
        let o_min = golden_section_minimize(
            |c| *oracle_values(n, a, c).last().unwrap(),
            -30.0,
            30.0,
            1e-11,
        );
        assert!(
            (mom.location.lambda - o_max.value).abs() < 1e-8,
            "n={n} a={a}"
        );
        assert!(
            (mim.location.lambda - o_min.value).abs() < 1e-8,
            "n={n} a={a}"
        );
    }
}
