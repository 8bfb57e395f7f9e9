//! Randomized and structural properties tying the closed forms, the oracles,
//! and the shooting layer together. The heavy cross-check suites live in
//! `tripower::verify` (shared with the CLI); this target runs them at a
//! moderate scale and adds the invariants that need bespoke setup.

use approx::assert_relative_eq;
use proptest::prelude::*;
use tripower::oracle::{find_roots, ScanConfig};
use tripower::rng::SplitMix64;
use tripower::shooting::{
    find_ground_state, integrate, GroundStateResult, Outcome, ShootingConfig,
};
use tripower::verify::{self, sample_triple};
use tripower::{DoublePower64, TrichotomyCase, TriplePower64};

#[test]
fn verify_suites_pass() {
    let report = verify::run(20260814, 300).unwrap();
    assert!(report.passed(), "failing suites: {:?}", report.suites);
    for suite in &report.suites {
        assert!(suite.checks > 0, "suite {} ran no checks", suite.name);
        // The skip filters must stay rare enough that the suites keep teeth.
        assert!(
            suite.skipped * 10 <= suite.checks + suite.skipped,
            "suite {} skipped too much: {} of {}",
            suite.name,
            suite.skipped,
            suite.checks + suite.skipped
        );
    }
}

#[test]
fn threshold_scales_linearly_in_b_and_c() {
    let mut rng = SplitMix64::new(31);
    let mut done = 0;
    while done < 200 {
        let f = sample_triple(&mut rng);
        if f.log_threshold().abs() > 600.0 {
            continue; // threshold not comfortably representable; log variant below covers it
        }
        done += 1;
        let (_, b, c) = f.coefficients();
        let (p, q, r) = f.exponents();
        for lambda in [1e-3, 1.0, 1e3] {
            let scaled = TriplePower64::new(f.a(), lambda * b, lambda * c, p, q, r).unwrap();
            assert_relative_eq!(scaled.threshold(), lambda * f.threshold(), max_relative = 1e-12);
        }
    }
}

#[test]
fn constructed_boundary_instances_have_a_double_zero() {
    let mut rng = SplitMix64::new(67);
    let mut done = 0;
    while done < 200 {
        let probe = sample_triple(&mut rng);
        let lt = probe.log_threshold();
        let u_star = probe.turning_point();
        if lt.abs() > 600.0 || !(1e-30..=1e30).contains(&u_star) {
            continue;
        }
        done += 1;
        let (_, b, c) = probe.coefficients();
        let (p, q, r) = probe.exponents();
        let f = TriplePower64::new(lt.exp(), b, c, p, q, r).unwrap();
        assert_eq!(f.classify(1e-9).unwrap(), TrichotomyCase::OneZero);

        // |f(u*)| and |f'(u*)| vanish relative to their dominant terms.
        let a = f.a();
        let value_scale = a * u_star.powf(p) + b * u_star.powf(q) + c * u_star.powf(r);
        let slope_scale = a * p * u_star.powf(p - 1.0)
            + b * q * u_star.powf(q - 1.0)
            + c * r * u_star.powf(r - 1.0);
        if !(value_scale.is_finite() && slope_scale.is_finite()) {
            continue;
        }
        assert!(f.eval(u_star).unwrap().abs() <= 1e-9 * value_scale);
        assert!(f.eval_derivative(u_star, 1).unwrap().abs() <= 1e-9 * slope_scale);
    }
}

/// Sample `count` log-spaced points strictly inside `(lo, hi)`, staying half
/// a cell away from both ends so root-adjacent sign noise cannot leak in.
fn interior_log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (llo, lhi) = (lo.ln(), hi.ln());
    (0..count).map(|i| (llo + (lhi - llo) * ((i as f64 + 0.5) / count as f64)).exp()).collect()
}

#[test]
fn root_sign_structure_holds_on_dense_samples() {
    let cfg = ScanConfig::default();
    let mut instances: Vec<TriplePower64> = vec![
        TriplePower64::new(0.125, 1.0, 1.0, 1.0, 2.0, 3.0).unwrap(),
        TriplePower64::new(0.1, 1.0, 1.0, 1.0, 3.0, 5.0).unwrap(),
        DoublePower64::new(0.1, 3.0, 5.0).unwrap().antiderivative(),
    ];
    let mut rng = SplitMix64::new(101);
    while instances.len() < 12 {
        let f = sample_triple(&mut rng);
        let nice = f.classify(1e-12).unwrap() == TrichotomyCase::PositivePart
            && f.log_threshold().abs() <= 100.0
            && (1e-3..=1e3).contains(&f.turning_point());
        if nice {
            instances.push(f);
        }
    }
    for f in &instances {
        let roots = find_roots(f, &cfg).unwrap();
        let values = roots.values();
        assert_eq!(values.len(), 2, "{f:?}");
        let (z1, z2) = (values[0], values[1]);
        for u in interior_log_grid(z1 / 100.0, z1, 100) {
            assert!(f.eval(u).unwrap() < 0.0, "{f:?}: f({u}) >= 0 below z1 = {z1}");
        }
        for u in interior_log_grid(z1, z2, 100) {
            assert!(f.eval(u).unwrap() > 0.0, "{f:?}: f({u}) <= 0 between roots");
        }
        for u in interior_log_grid(z2, z2 * 100.0, 100) {
            assert!(f.eval(u).unwrap() < 0.0, "{f:?}: f({u}) >= 0 above z2 = {z2}");
        }
    }
}

#[test]
fn trajectories_below_the_f_zero_never_cross() {
    // For omega = 0.1, (p,q) = (3,5): F < 0 on (0, z_F), so no amplitude
    // below z_F has the energy to reach zero.
    let g = DoublePower64::new(0.1, 3.0, 5.0).unwrap();
    let z_f = ((1.5 - 1.05f64.sqrt()) / 2.0).sqrt();
    let mut rng = SplitMix64::new(5150);
    for dim in [1usize, 2, 3] {
        let cfg = ShootingConfig::for_double_power(dim, &g).unwrap();
        for _ in 0..4 {
            let alpha = rng.uniform(0.05, 0.95) * z_f;
            let trajectory = integrate(&cfg, alpha).unwrap();
            assert_ne!(
                trajectory.outcome,
                Outcome::Crossing,
                "n={dim}, alpha={alpha} crossed below the F-zero"
            );
        }
    }
}

#[test]
fn ground_states_satisfy_the_positivity_post_conditions() {
    for dim in [2usize, 3] {
        for omega in [0.05, 0.1, 0.15] {
            let g = DoublePower64::new(omega, 3.0, 5.0).unwrap();
            let cfg = ShootingConfig::for_double_power(dim, &g).unwrap();
            let result = find_ground_state(&cfg).unwrap();
            let GroundStateResult::Found(gs) = result else {
                panic!("n={dim}, omega={omega}: expected a ground state");
            };
            let f = g.as_triple();
            let big_f = f.antiderivative();
            assert!(f.eval(gs.alpha_star).unwrap() > 0.0);
            assert!(big_f.eval(gs.alpha_star).unwrap() > 0.0);
            assert_eq!(gs.trajectory.outcome, Outcome::Decay);
        }
    }
}

/// A valid parameter set with pairwise exponent gaps at least 0.1, the same
/// shape `sample_triple` draws from.
fn params() -> impl Strategy<Value = (f64, f64, f64, f64, f64, f64)> {
    (-6.9f64..6.9, -6.9f64..6.9, -6.9f64..6.9, 0.11f64..4.0, 0.1f64..3.0, 0.1f64..3.0)
        .prop_map(|(la, lb, lc, p, s, t)| (la.exp(), lb.exp(), lc.exp(), p, p + s, p + s + t))
}

proptest! {
    #[test]
    fn tilde_has_the_closed_coefficients_and_exponents((a, b, c, p, q, r) in params()) {
        let f = TriplePower64::new(a, b, c, p, q, r).unwrap();
        let tilde = f.tilde();
        if p + q <= 1.0 {
            prop_assert!(tilde.is_err());
            return Ok(());
        }
        let tf = tilde.unwrap();
        let (tp, tq, tr) = tf.exponents();
        prop_assert_eq!(tp, p + q - 1.0);
        prop_assert_eq!(tq, p + r - 1.0);
        prop_assert_eq!(tr, q + r - 1.0);
        let (ta, tb, tc) = tf.coefficients();
        let (s, t) = (q - p, r - q);
        prop_assert!((ta / (a * b * s * s) - 1.0).abs() < 1e-12);
        prop_assert!((tb / (c * a * (s + t) * (s + t)) - 1.0).abs() < 1e-12);
        prop_assert!((tc / (b * c * t * t) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classification_is_total_and_duality_flips_the_outer_cases(
        (a, b, c, p, q, r) in params(),
    ) {
        let f = TriplePower64::new(a, b, c, p, q, r).unwrap();
        let case = f.classify(1e-12).unwrap();
        prop_assert_eq!(case.dual().dual(), case);
        prop_assume!(p + q > 1.0);
        prop_assume!((f.a().ln() - f.log_threshold()).abs() > 1e-6);
        let dual = f.tilde().unwrap().classify(1e-12).unwrap();
        prop_assert_eq!(dual, case.dual());
        prop_assert_ne!(case, TrichotomyCase::OneZero);
    }

    #[test]
    fn log_threshold_shifts_by_log_lambda(
        (a, b, c, p, q, r) in params(),
        log_lambda in -6.9f64..6.9,
    ) {
        let f = TriplePower64::new(a, b, c, p, q, r).unwrap();
        let lambda = log_lambda.exp();
        let scaled = TriplePower64::new(a, lambda * b, lambda * c, p, q, r).unwrap();
        let shift = scaled.log_threshold() - f.log_threshold() - log_lambda;
        prop_assert!(shift.abs() <= 1e-9 * (1.0 + f.log_threshold().abs()));
    }
}
