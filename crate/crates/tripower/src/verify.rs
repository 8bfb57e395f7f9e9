//! Seeded cross-check suites between the closed forms and the oracles.
//!
//! Each suite draws deterministic random instances (SplitMix64, see
//! [`crate::rng`]) and checks one contract between independent layers:
//! closed-form classification against grid scans, closed-form tilde values
//! against finite differences, threshold formulas against grid maxima, and
//! the duality / threshold-ordering statements against direct evaluation.
//! Given the same seed and trial count, every suite performs bit-identical
//! work and reports bit-identical results.
//!
//! Random instances use the standard stress distribution: coefficients
//! log-uniform in `[1e-3, 1e3]`, exponents sorted uniform in `(0.1, 8)` with
//! pairwise gaps at least `0.1`. That reaches thresholds and turning points
//! far outside the comfortable range (up to `10^{±462}`), which is exactly
//! what the log-space classification paths exist for; suites that must
//! evaluate *values* rather than compare *logs* additionally filter out
//! instances whose working products leave `[1e-240, 1e240]` and count them
//! as skipped.

use crate::double::{eta_threshold, omega_threshold, DoublePower};
use crate::error::{domain, Result};
use crate::oracle::{
    find_roots, log_grid_peak, scan_classify, tilde_fd, tilde_scale, Multiplicity, ScanConfig,
    DEFAULT_FD_H_SCALE,
};
use crate::power::{TrichotomyCase, TriplePower};
use crate::rng::SplitMix64;

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    /// Stable suite name, usable as an identifier in reports.
    pub name: &'static str,
    /// Number of individual checks that ran.
    pub checks: usize,
    /// Instances excluded by tolerance bands or representability filters.
    pub skipped: usize,
    /// Number of failed checks.
    pub failures: usize,
    /// Human-readable description of the first failure, if any.
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, checks: 0, skipped: 0, failures: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Report over all suites for one seed.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Run every suite. `trials` sizes the big random suites directly; the
/// value-sensitive suites (tilde identity, boundary construction, oracle
/// roots) run `max(1, trials/10)` instances each. Requires `trials ≥ 1`.
pub fn run(seed: u64, trials: usize) -> Result<VerifyReport> {
    if trials == 0 {
        return Err(domain("verify requires at least 1 trial".to_string()));
    }
    let mut seeder = SplitMix64::new(seed);
    let mut next = || seeder.next_u64();
    let tenth = (trials / 10).max(1);
    let suites = vec![
        suite_threshold_vs_grid(next(), trials),
        suite_classification_agreement(next(), trials),
        suite_tilde_identity(next(), tenth, 100),
        suite_duality_random(next(), trials),
        suite_duality_boundary(next(), tenth),
        suite_threshold_closures(),
        suite_predicate_legs(next(), trials),
        suite_oracle_roots(next(), tenth),
    ];
    Ok(VerifyReport { seed, trials, suites })
}

/// Draw a random triple-power instance from the stress distribution.
pub fn sample_triple(rng: &mut SplitMix64) -> TriplePower<f64> {
    loop {
        let a = rng.log_uniform(1e-3, 1e3);
        let b = rng.log_uniform(1e-3, 1e3);
        let c = rng.log_uniform(1e-3, 1e3);
        let mut e = [rng.uniform(0.1, 8.0), rng.uniform(0.1, 8.0), rng.uniform(0.1, 8.0)];
        e.sort_by(|x, y| x.partial_cmp(y).unwrap());
        if e[1] - e[0] >= 0.1 && e[2] - e[1] >= 0.1 {
            return TriplePower::new(a, b, c, e[0], e[1], e[2])
                .expect("sampled parameters satisfy the invariants");
        }
    }
}

/// Relative distance of `a` from the threshold, as a log gap.
fn log_gap(f: &TriplePower<f64>) -> f64 {
    f.a().ln() - f.log_threshold()
}

/// Threshold formula vs. the grid maximum of the hump (log comparison).
pub fn suite_threshold_vs_grid(seed: u64, trials: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("threshold-vs-grid");
    let mut rng = SplitMix64::new(seed);
    let cfg = ScanConfig::default();
    for _ in 0..trials {
        let f = sample_triple(&mut rng);
        let peak = log_grid_peak(&f, &cfg).expect("default scan config is valid");
        let lt = f.log_threshold();
        suite.check((peak - lt).abs() <= 1e-6, || {
            format!("{f:?}: grid peak log {peak} vs threshold log {lt}")
        });
    }
    suite
}

/// Closed-form classification vs. the scan oracle, outside the 1e-9 band.
pub fn suite_classification_agreement(seed: u64, trials: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("classification-agreement");
    let mut rng = SplitMix64::new(seed);
    let cfg = ScanConfig::default();
    for _ in 0..trials {
        let f = sample_triple(&mut rng);
        if log_gap(&f).abs() < 1e-9 {
            suite.skipped += 1;
            continue;
        }
        let closed = f.classify(1e-12).expect("valid tolerance");
        let scanned = scan_classify(&f, &cfg).expect("default scan config is valid");
        suite
            .check(closed == scanned, || format!("{f:?}: classify {closed:?} vs scan {scanned:?}"));
    }
    suite
}

/// Working magnitude of the tilde products at `u`, for representability
/// filtering: true means all comparisons stay far from `f64`'s range limits.
fn tilde_products_representable(f: &TriplePower<f64>, u: f64) -> bool {
    match tilde_scale(f, u) {
        Ok(m) => (1e-240..=1e240).contains(&m),
        Err(_) => false,
    }
}

/// Finite-difference tilde vs. the closed-form transform, compared relative
/// to the magnitude of the products both sides subtract through.
pub fn suite_tilde_identity(seed: u64, instances: usize, points: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("tilde-identity");
    let mut rng = SplitMix64::new(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < instances && attempts < instances * 1000 {
        attempts += 1;
        let f = sample_triple(&mut rng);
        let u_star = f.turning_point();
        let lo = u_star / 10.0;
        let hi = u_star * 10.0;
        let representable = f.tilde().is_ok()
            && u_star.is_finite()
            && lo > 0.0
            && tilde_products_representable(&f, lo)
            && tilde_products_representable(&f, hi);
        if !representable {
            suite.skipped += 1;
            continue;
        }
        done += 1;
        let tf = f.tilde().expect("filtered above");
        for i in 0..points {
            let tau = i as f64 / (points - 1).max(1) as f64;
            let u = (lo.ln() + (hi.ln() - lo.ln()) * tau).exp();
            let fd = tilde_fd(&f, u, DEFAULT_FD_H_SCALE).expect("u > 0");
            let cf = tf.eval(u).expect("u > 0");
            let scale = tilde_scale(&f, u).expect("u > 0");
            suite.check((fd - cf).abs() <= 1e-6 * scale, || {
                format!("{f:?} at u={u}: fd {fd} vs closed {cf}, scale {scale}")
            });
        }
    }
    suite
}

/// Classification duality: away from the boundary, `f` and `f̃` land in
/// opposite outer cases.
pub fn suite_duality_random(seed: u64, trials: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("duality-random");
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let f = sample_triple(&mut rng);
        let Ok(tf) = f.tilde() else {
            suite.skipped += 1;
            continue;
        };
        // |a - T|/T > 1e-6 keeps both f and f̃ decisively off the boundary.
        if log_gap(&f).abs() <= 1e-6 {
            suite.skipped += 1;
            continue;
        }
        let case = f.classify(1e-12).expect("valid tolerance");
        let dual = tf.classify(1e-12).expect("valid tolerance");
        suite.check(dual == case.dual() && case != TrichotomyCase::OneZero, || {
            format!("{f:?}: case {case:?}, tilde case {dual:?}")
        });
    }
    suite
}

/// Constructed boundary instances (`a := T` exactly as representable):
/// both `f` and `f̃` classify as the boundary case at `rel_tol = 1e-9`.
pub fn suite_duality_boundary(seed: u64, instances: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("duality-boundary");
    let mut rng = SplitMix64::new(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < instances && attempts < instances * 1000 {
        attempts += 1;
        let probe = sample_triple(&mut rng);
        let lt = probe.log_threshold();
        if lt.abs() > 690.0 {
            // The threshold itself is not representable; a := T is
            // impossible in f64.
            suite.skipped += 1;
            continue;
        }
        let (p, q, r) = probe.exponents();
        let f = TriplePower::new(lt.exp(), probe.b(), probe.c(), p, q, r)
            .expect("threshold is positive and finite here");
        let Ok(tf) = f.tilde() else {
            suite.skipped += 1;
            continue;
        };
        done += 1;
        let case = f.classify(1e-9).expect("valid tolerance");
        let dual = tf.classify(1e-9).expect("valid tolerance");
        suite.check(case == TrichotomyCase::OneZero && dual == TrichotomyCase::OneZero, || {
            format!("{f:?}: boundary case {case:?}, tilde case {dual:?}")
        });
    }
    suite
}

/// The exponent grid used by the closed-form threshold checks:
/// `p ∈ {1.1, 1.5, 2, 3, 4}`, `q` from `p + 0.2` to `8` in steps of `0.5`.
pub fn threshold_grid() -> Vec<(f64, f64)> {
    let mut grid = Vec::new();
    for &p in &[1.1, 1.5, 2.0, 3.0, 4.0] {
        let mut q = p + 0.2;
        while q <= 8.0 {
            grid.push((p, q));
            q += 0.5;
        }
    }
    grid
}

/// Closed-form `ω_{p,q}` and `η_{p,q}` against the triple-power threshold
/// they are instances of, plus the strict ordering and the exact spot values
/// at `(p, q) = (3, 5)`.
pub fn suite_threshold_closures() -> SuiteResult {
    let mut suite = SuiteResult::new("threshold-closures");
    for (p, q) in threshold_grid() {
        let g = DoublePower::new(1.0, p, q).expect("grid exponents are valid");
        let omega = omega_threshold(p, q).expect("grid exponents are valid");
        let eta = eta_threshold(p, q).expect("grid exponents are valid");
        let from_f = 2.0 * g.antiderivative().threshold();
        let from_g = g.as_triple().threshold();
        suite.check((omega - from_f).abs() <= 1e-12 * omega, || {
            format!("(p,q)=({p},{q}): omega {omega} vs antiderivative threshold doubled {from_f}")
        });
        suite.check((eta - from_g).abs() <= 1e-12 * eta, || {
            format!("(p,q)=({p},{q}): eta {eta} vs triple-power threshold {from_g}")
        });
        suite.check(omega < eta, || {
            format!("(p,q)=({p},{q}): ordering violated: omega {omega} >= eta {eta}")
        });
    }
    let omega35: f64 = omega_threshold(3.0, 5.0).expect("valid");
    let eta35: f64 = eta_threshold(3.0, 5.0).expect("valid");
    suite.check((omega35 - 0.1875).abs() <= 1e-15 * 0.1875, || {
        format!("omega(3,5) = {omega35}, expected 3/16")
    });
    suite.check((eta35 - 0.25).abs() <= 1e-15 * 0.25, || {
        format!("eta(3,5) = {eta35}, expected 1/4")
    });
    suite
}

/// The two threshold predicates against direct classification of the
/// corresponding triple-power forms, and duality applied to both forms.
pub fn suite_predicate_legs(seed: u64, trials: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("predicate-legs");
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let p = rng.uniform(1.05, 5.0);
        let q = p + rng.uniform(0.2, 3.0);
        let omega_pq = omega_threshold(p, q).expect("sampled exponents are valid");
        let eta_pq = eta_threshold(p, q).expect("sampled exponents are valid");
        let omega = rng.log_uniform(omega_pq / 30.0, eta_pq * 30.0);
        let g = DoublePower::new(omega, p, q).expect("sampled parameters are valid");

        let exist_gap = (omega / omega_pq).ln();
        if exist_gap.abs() >= 1e-9 {
            let big_g = g.antiderivative();
            let case = big_g.classify(1e-12).expect("valid tolerance");
            suite.check(g.existence_predicted() == (case == TrichotomyCase::PositivePart), || {
                format!("{g:?}: existence predicate vs antiderivative case {case:?}")
            });
            let dual = big_g.tilde().expect("p+q+1 > 1").classify(1e-12).expect("valid");
            suite.check(
                (case == TrichotomyCase::PositivePart) == (dual == TrichotomyCase::Negative),
                || format!("{g:?}: antiderivative case {case:?} vs tilde case {dual:?}"),
            );
        } else {
            suite.skipped += 1;
        }

        let uniq_gap = (omega / eta_pq).ln();
        if uniq_gap.abs() >= 1e-9 {
            let t = g.as_triple();
            let case = t.classify(1e-12).expect("valid tolerance");
            suite.check(g.uniqueness_predicted() == (case == TrichotomyCase::PositivePart), || {
                format!("{g:?}: uniqueness predicate vs case {case:?}")
            });
            let dual = t.tilde().expect("1 + p > 1").classify(1e-12).expect("valid");
            suite.check(
                (case == TrichotomyCase::PositivePart) == (dual == TrichotomyCase::Negative),
                || format!("{g:?}: case {case:?} vs tilde case {dual:?}"),
            );
        } else {
            suite.skipped += 1;
        }
    }
    suite
}

/// Root finding: counts mirror the trichotomy, residuals vanish relative to
/// the term magnitudes, and the sign pattern around the roots is correct.
pub fn suite_oracle_roots(seed: u64, instances: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("oracle-roots");
    let mut rng = SplitMix64::new(seed);
    let cfg = ScanConfig::default();
    let term_sum = |f: &TriplePower<f64>, u: f64| {
        let (a, b, c) = f.coefficients();
        let (p, q, r) = f.exponents();
        a * u.powf(p) + b * u.powf(q) + c * u.powf(r)
    };
    for _ in 0..instances {
        let f = sample_triple(&mut rng);
        if log_gap(&f).abs() < 1e-9 {
            suite.skipped += 1;
            continue;
        }
        let case = f.classify(1e-12).expect("valid tolerance");
        let roots = match find_roots(&f, &cfg) {
            Ok(r) => r,
            Err(e) => {
                suite.check(false, || format!("{f:?}: find_roots failed: {e}"));
                continue;
            }
        };
        let expected = match case {
            TrichotomyCase::PositivePart => 2,
            TrichotomyCase::OneZero => 1,
            TrichotomyCase::Negative => 0,
        };
        suite.check(roots.len() == expected, || {
            format!("{f:?}: case {case:?} but {} roots", roots.len())
        });
        if roots.len() != 2 {
            continue;
        }
        let z1 = roots.roots[0].value;
        let z2 = roots.roots[1].value;
        suite.check(
            z1 < z2 && roots.roots.iter().all(|r| r.multiplicity == Multiplicity::Simple),
            || format!("{f:?}: malformed root set {roots:?}"),
        );
        for z in [z1, z2] {
            let scale = term_sum(&f, z);
            if !scale.is_finite() || scale < 1e-290 {
                suite.skipped += 1;
                continue;
            }
            let res = f.eval(z).expect("z > 0");
            suite.check(res.abs() <= 1e-9 * scale, || {
                format!("{f:?}: residual {res} at root {z} exceeds 1e-9 x {scale}")
            });
        }
        // Sign pattern: negative below z1 and above z2, positive between.
        let samples = [(z1 * 0.5, -1.0), ((z1 * z2).sqrt(), 1.0), (z2 * 2.0, -1.0)];
        for (u, want) in samples {
            let v = f.eval(u).expect("u > 0");
            if !v.is_finite() && v.is_sign_negative() {
                // -inf: decisively negative.
                suite.check(want < 0.0, || format!("{f:?}: f({u}) = -inf, expected sign {want}"));
                continue;
            }
            if v.abs() < 1e-290 {
                // Too close to underflow for the sign to mean anything.
                suite.skipped += 1;
                continue;
            }
            suite.check(v.signum() == want, || {
                format!("{f:?}: sign of f({u}) = {v}, expected sign {want}")
            });
        }
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_rejects_zero_trials() {
        assert!(run(42, 0).is_err());
    }

    #[test]
    fn sampled_instances_satisfy_invariants() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..200 {
            let f = sample_triple(&mut rng);
            let (p, q, r) = f.exponents();
            assert!(q - p >= 0.1 && r - q >= 0.1);
            let (a, b, c) = f.coefficients();
            for v in [a, b, c] {
                assert!((1e-3..1e3).contains(&v));
            }
        }
    }

    #[test]
    fn suites_are_deterministic() {
        let a = run(42, 50).unwrap();
        let b = run(42, 50).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quick_smoke_run_passes() {
        let report = run(7, 60).unwrap();
        for suite in &report.suites {
            assert_eq!(suite.failures, 0, "suite {} failed: {:?}", suite.name, suite.first_failure);
        }
    }

    #[test]
    fn threshold_grid_covers_the_exponent_box() {
        let grid = threshold_grid();
        assert!(grid.len() > 50);
        assert!(grid.iter().all(|&(p, q)| q > p && q <= 8.0));
        assert!(grid.iter().any(|&(p, q)| p == 1.1 && q > 7.5));
    }
}
