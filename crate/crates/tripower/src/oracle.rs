//! Numeric oracles: grid scans, bisection, and finite differences.
//!
//! Everything here re-derives sign structure from pointwise evaluation only,
//! so it can cross-check the closed forms in [`crate::power`] without sharing
//! their algebra. The one closed form the oracles do use is the turning
//! point, which merely centers the scan grid; the *decisions* (sign of the
//! maximum, root locations, transformed values) come from evaluation.
//!
//! Scans work on the scaled bracket `V(u) = (b·u^{q-p} - c·u^{r-p})/a - 1`,
//! which has the same sign trichotomy as `f` on `u > 0`: `f(u) = a·u^p·V(u)`.
//! `V` rises to its unique maximum at the turning point and falls away on
//! both sides, so a log-spaced grid around the turning point sees the whole
//! sign story.

use crate::error::{domain, Result};
use crate::power::{TrichotomyCase, TriplePower};
use crate::scalar::Real;

/// Default number of scan grid points. Odd so the turning point is exactly
/// the middle grid point; boundary cases then see the true maximum rather
/// than a grid-resolution dip.
pub const DEFAULT_SCAN_POINTS: usize = 100_001;

/// Default half-width of the scan window as a multiplicative span:
/// `u ∈ [u*/span, u*·span]`.
pub const DEFAULT_SCAN_SPAN: f64 = 100.0;

/// Default dead band for calling the scanned maximum "zero", relative to `a`.
pub const DEFAULT_ZERO_BAND: f64 = 1e-9;

/// Default relative step for [`tilde_fd`]'s fourth-order stencils.
pub const DEFAULT_FD_H_SCALE: f64 = 1e-3;

/// Configuration for the grid-scan oracles.
///
/// Invariants (checked by every scan): `points ≥ 1000`, `span ≥ 10` finite,
/// `zero_band ∈ (0, 1e-6]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig<R> {
    /// Number of log-spaced grid points across the window.
    pub points: usize,
    /// Multiplicative half-width of the window around the turning point.
    pub span: R,
    /// Relative dead band around zero for the boundary decision.
    pub zero_band: R,
}

impl<R: Real> Default for ScanConfig<R> {
    fn default() -> Self {
        ScanConfig {
            points: DEFAULT_SCAN_POINTS,
            span: R::of(DEFAULT_SCAN_SPAN),
            zero_band: R::of(DEFAULT_ZERO_BAND),
        }
    }
}

impl<R: Real> ScanConfig<R> {
    fn validate(&self) -> Result<()> {
        if self.points < 1000 {
            return Err(domain(format!("scan requires at least 1000 points; got {}", self.points)));
        }
        if !(self.span.is_finite() && self.span >= R::of(10.0)) {
            return Err(domain(format!("scan span must be finite and >= 10; got {}", self.span)));
        }
        if !(self.zero_band > R::zero() && self.zero_band <= R::of(1e-6)) {
            return Err(domain(format!("zero band must lie in (0, 1e-6]; got {}", self.zero_band)));
        }
        Ok(())
    }
}

/// Multiplicity tag attached to each root found by [`find_roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Simple,
    Double,
}

/// A sign change (or touch point) of `f` on `u > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root<R> {
    pub value: R,
    pub multiplicity: Multiplicity,
}

/// Ordered positive roots of a triple-power function: empty, one double
/// root, or two simple roots — mirroring the trichotomy.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<R> {
    pub roots: Vec<Root<R>>,
}

impl<R: Real> RootSet<R> {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Root locations in increasing order.
    pub fn values(&self) -> Vec<R> {
        self.roots.iter().map(|r| r.value).collect()
    }
}

/// Natural log of the grid maximum of the hump `m(u) = b·u^{q-p} - c·u^{r-p}`.
///
/// This is the oracle counterpart of [`TriplePower::log_threshold`]: the true
/// maximum of `m` over `u > 0` *is* the threshold, so the two should agree to
/// within the grid's resolution. The turning point itself is always included
/// as an extra evaluation so boundary instances see the true peak.
pub fn log_grid_peak<R: Real>(f: &TriplePower<R>, cfg: &ScanConfig<R>) -> Result<R> {
    cfg.validate()?;
    let (lb, lc) = (f.b().ln(), f.c().ln());
    let (s, t, st) = f.gaps();
    let x_star = f.log_turning_point();
    let half = cfg.span.ln();
    let x_lo = x_star - half;
    let n = cfg.points;
    let dx = (half + half) / R::of((n - 1) as f64);

    // Linear evaluation is safe when both terms stay inside the exponent
    // range at the window edges (their logs are linear in x, so the edges
    // bound the interior).
    let lim = R::of(690.0);
    let edge = |x: R| (lb + s * x).abs().max((lc + st * x).abs());
    let linear_ok = edge(x_lo).max(edge(x_star + half)) < lim;

    let mut peak = R::neg_infinity();
    if linear_ok {
        let mut w1 = (lb + s * x_lo).exp();
        let mut w2 = (lc + st * x_lo).exp();
        let m1 = (s * dx).exp();
        let m2 = (st * dx).exp();
        let mut best = R::zero();
        for _ in 0..n {
            best = best.max(w1 - w2);
            w1 = w1 * m1;
            w2 = w2 * m2;
        }
        // Exact turning-point evaluation, free of grid placement and of the
        // multiplicative drift of the running products.
        best = best.max((lb + s * x_star).exp() - (lc + st * x_star).exp());
        if best > R::zero() {
            peak = best.ln();
        }
    } else {
        // Fully logarithmic: m(u) = exp(L1)·(1 - exp(Ld)) with
        // L1 = ln b + (q-p)·x and Ld = ln(c/b) + (r-q)·x; positive iff Ld < 0.
        let mut at = |x: R| {
            let l1 = lb + s * x;
            let ld = lc - lb + t * x;
            if ld < R::zero() {
                peak = peak.max(l1 + (-(ld.exp())).ln_1p());
            }
        };
        for i in 0..n {
            at(x_lo + R::of(i as f64) * dx);
        }
        at(x_star);
    }
    Ok(peak)
}

/// Classify the trichotomy by scanning the scaled bracket on a log grid.
///
/// Decision: with `Δ = ln(max m) - ln a`, the case is `PositivePart` when
/// `Δ > zero_band`, `Negative` when `Δ < -zero_band`, and `OneZero` inside
/// the band (for band sizes ≤ 1e-6 this matches comparing `max m / a - 1`
/// against `±zero_band` to second order in the band).
pub fn scan_classify<R: Real>(f: &TriplePower<R>, cfg: &ScanConfig<R>) -> Result<TrichotomyCase> {
    let delta = log_grid_peak(f, cfg)? - f.a().ln();
    Ok(if delta > cfg.zero_band {
        TrichotomyCase::PositivePart
    } else if delta < -cfg.zero_band {
        TrichotomyCase::Negative
    } else {
        TrichotomyCase::OneZero
    })
}

/// Locate the positive roots of `f` by bisection on the scaled bracket.
///
/// The bracket endpoints are analytic: at `u_left = (a/b)^{1/(q-p)}` the
/// bracket equals `-(c/a)·u^{r-p} < 0`, and at `u_right = (b/c)^{1/(r-q)}`
/// it equals exactly `-1`; between them it rises through the turning point.
/// Bisection runs in `x = ln u` to an interval of `1e-12`, which bounds the
/// root error by `1e-12·max(1, z)` in `u`.
pub fn find_roots<R: Real>(f: &TriplePower<R>, cfg: &ScanConfig<R>) -> Result<RootSet<R>> {
    let case = scan_classify(f, cfg)?;
    match case {
        TrichotomyCase::Negative => Ok(RootSet { roots: Vec::new() }),
        TrichotomyCase::OneZero => Ok(RootSet {
            roots: vec![Root { value: f.turning_point(), multiplicity: Multiplicity::Double }],
        }),
        TrichotomyCase::PositivePart => {
            let x_star = f.log_turning_point();
            if !(f.bracket_ratio(x_star.exp()) > R::zero()) {
                // Positive window narrower than evaluation noise; report the
                // touch point rather than two indistinguishable roots.
                return Ok(RootSet {
                    roots: vec![Root {
                        value: f.turning_point(),
                        multiplicity: Multiplicity::Double,
                    }],
                });
            }
            let (s, t, _) = f.gaps();
            let la = f.a().ln();
            let lb = f.b().ln();
            let lc = f.c().ln();
            let x_left = ensure_negative(f, (la - lb) / s, -R::of(0.7))?;
            let x_right = ensure_negative(f, (lb - lc) / t, R::of(0.7))?;
            let z1 = bisect_log(f, x_left, x_star, true);
            let z2 = bisect_log(f, x_star, x_right, false);
            Ok(RootSet {
                roots: vec![
                    Root { value: z1, multiplicity: Multiplicity::Simple },
                    Root { value: z2, multiplicity: Multiplicity::Simple },
                ],
            })
        }
    }
}

/// Step `x` by `delta` until the bracket is negative there (it analytically
/// already is; one step absorbs any rounding at the seed point).
fn ensure_negative<R: Real>(f: &TriplePower<R>, mut x: R, delta: R) -> Result<R> {
    for _ in 0..300 {
        if f.bracket_ratio(x.exp()) < R::zero() {
            return Ok(x);
        }
        x = x + delta;
    }
    Err(domain("root bracketing failed: scaled bracket never went negative".to_string()))
}

/// Bisect the bracket's sign change on `[x_lo, x_hi]` in log coordinates.
/// `rising` selects which branch of the unimodal bracket is being cut.
fn bisect_log<R: Real>(f: &TriplePower<R>, mut lo: R, mut hi: R, rising: bool) -> R {
    let tol = R::of(1e-12);
    let two = R::of(2.0);
    while hi - lo > tol {
        let mid = (lo + hi) / two;
        let neg = f.bracket_ratio(mid.exp()) < R::zero();
        if neg == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ((lo + hi) / two).exp()
}

/// Finite-difference evaluation of the tilde transform
/// `f̃(u) = (u·f'(u))'·f(u) - u·f'(u)²` from pointwise values of `f` only.
///
/// Both the inner derivative `f'` and the outer derivative `(u·f')'` use
/// fourth-order central stencils with a step proportional to the evaluation
/// point, `h = h_scale·v`, keeping the truncation error scale-free.
/// `h_scale` must lie in `(0, 0.05]`; [`DEFAULT_FD_H_SCALE`] balances
/// truncation against rounding for double precision.
pub fn tilde_fd<R: Real>(f: &TriplePower<R>, u: R, h_scale: R) -> Result<R> {
    if !(u.is_finite() && u > R::zero()) {
        return Err(domain(format!("tilde_fd requires finite u > 0; got u = {u}")));
    }
    if !(h_scale > R::zero() && h_scale <= R::of(0.05)) {
        return Err(domain(format!("tilde_fd step scale must lie in (0, 0.05]; got {h_scale}")));
    }
    let d1 = |g: &dyn Fn(R) -> R, x: R| -> R {
        let h = h_scale * x;
        let eight = R::of(8.0);
        let twelve = R::of(12.0);
        let two = R::of(2.0);
        (eight * (g(x + h) - g(x - h)) - (g(x + two * h) - g(x - two * h))) / (twelve * h)
    };
    let fp = |v: R| d1(&|w| f.eval_raw(w), v);
    let phi = |v: R| v * fp(v);
    let phi_p = d1(&phi, u);
    Ok(phi_p * f.eval_raw(u) - u * fp(u) * fp(u))
}

/// Magnitude scale of the products defining the tilde transform at `u`:
/// `Σᵢ|cᵢ|kᵢ²u^{kᵢ-1} · Σⱼ|cⱼ|u^{kⱼ} + u·(Σᵢ|cᵢ|kᵢu^{kᵢ-1})²`.
///
/// Relative comparisons of tilde values should divide by this rather than by
/// `|f̃(u)|`: the transform's leading products cancel exactly, so its value
/// can sit far below the magnitudes any evaluation (closed-form or FD) has
/// to subtract through.
pub fn tilde_scale<R: Real>(f: &TriplePower<R>, u: R) -> Result<R> {
    if !(u.is_finite() && u > R::zero()) {
        return Err(domain(format!("tilde_scale requires finite u > 0; got u = {u}")));
    }
    let (a, b, c) = f.coefficients();
    let (p, q, r) = f.exponents();
    let up = u.powf(p);
    let uq = u.powf(q);
    let ur = u.powf(r);
    let s0 = a * up + b * uq + c * ur;
    let s1 = (a * p * up + b * q * uq + c * r * ur) / u;
    let s2 = (a * p * p * up + b * q * q * uq + c * r * r * ur) / u;
    Ok(s2 * s0 + u * s1 * s1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn f(a: f64, b: f64, c: f64, p: f64, q: f64, r: f64) -> TriplePower<f64> {
        TriplePower::new(a, b, c, p, q, r).unwrap()
    }

    fn cfg() -> ScanConfig<f64> {
        ScanConfig::default()
    }

    #[test]
    fn config_validation_rejects_bad_values() {
        let base = cfg();
        assert!(ScanConfig { points: 999, ..base }.validate().is_err());
        assert!(ScanConfig { span: 9.0, ..base }.validate().is_err());
        assert!(ScanConfig { span: f64::INFINITY, ..base }.validate().is_err());
        assert!(ScanConfig { zero_band: 0.0, ..base }.validate().is_err());
        assert!(ScanConfig { zero_band: 1e-5, ..base }.validate().is_err());
        assert!(base.validate().is_ok());
    }

    #[test]
    fn scan_matches_closed_form_classification() {
        let rel = 1e-12;
        for &(a, expect) in &[
            (0.125, TrichotomyCase::PositivePart),
            (0.25, TrichotomyCase::OneZero),
            (0.5, TrichotomyCase::Negative),
        ] {
            let g = f(a, 1.0, 1.0, 1.0, 2.0, 3.0);
            assert_eq!(scan_classify(&g, &cfg()).unwrap(), expect);
            assert_eq!(g.classify(rel).unwrap(), expect);
        }
    }

    #[test]
    fn scan_detects_constructed_boundary_instances() {
        let base = f(1.0, 1.7, 0.9, 1.3, 2.6, 4.2);
        let g = f(base.threshold(), 1.7, 0.9, 1.3, 2.6, 4.2);
        assert_eq!(scan_classify(&g, &cfg()).unwrap(), TrichotomyCase::OneZero);
    }

    #[test]
    fn grid_peak_agrees_with_log_threshold() {
        for &(a, b, c, p, q, r) in &[
            (1.0, 1.0, 1.0, 1.0, 2.0, 3.0),
            (0.3, 2.0, 0.7, 1.5, 2.2, 5.0),
            (5.0, 0.01, 900.0, 0.4, 3.1, 7.9),
            // Threshold far outside f64 range: exercises the log-space scan.
            (1e-3, 1e3, 1e-3, 0.1, 7.8, 7.9),
        ] {
            let g = f(a, b, c, p, q, r);
            let peak = log_grid_peak(&g, &cfg()).unwrap();
            assert!(
                (peak - g.log_threshold()).abs() < 1e-6,
                "peak {} vs threshold {}",
                peak,
                g.log_threshold()
            );
        }
    }

    #[test]
    fn find_roots_matches_the_quadratic_formula() {
        // -u/8 + u² - u³ = 0 on u > 0 ⟺ u² - u + 1/8 = 0.
        let g = f(0.125, 1.0, 1.0, 1.0, 2.0, 3.0);
        let roots = find_roots(&g, &cfg()).unwrap();
        assert_eq!(roots.len(), 2);
        let half_sqrt = 0.5f64.sqrt();
        assert_relative_eq!(roots.roots[0].value, (1.0 - half_sqrt) / 2.0, max_relative = 1e-10);
        assert_relative_eq!(roots.roots[1].value, (1.0 + half_sqrt) / 2.0, max_relative = 1e-10);
        assert!(roots.roots.iter().all(|r| r.multiplicity == Multiplicity::Simple));
        // Roots straddle the turning point.
        let u_star = g.turning_point();
        assert!(roots.roots[0].value < u_star && u_star < roots.roots[1].value);
    }

    #[test]
    fn find_roots_reports_the_double_zero() {
        let g = f(0.25, 1.0, 1.0, 1.0, 2.0, 3.0);
        let roots = find_roots(&g, &cfg()).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots.roots[0].multiplicity, Multiplicity::Double);
        assert_relative_eq!(roots.roots[0].value, 0.5, max_relative = 1e-12);
    }

    #[test]
    fn find_roots_empty_for_negative_case() {
        let g = f(0.5, 1.0, 1.0, 1.0, 2.0, 3.0);
        assert!(find_roots(&g, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn root_residuals_vanish_relative_to_term_magnitudes() {
        let g = f(0.125, 1.0, 1.0, 1.0, 2.0, 3.0);
        for root in find_roots(&g, &cfg()).unwrap().roots {
            let z = root.value;
            let scale = 0.125 * z + z * z + z * z * z;
            assert!(g.eval(z).unwrap().abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn fd_tilde_matches_hand_values() {
        let g = f(1.0, 1.0, 1.0, 1.0, 2.0, 3.0);
        let h = DEFAULT_FD_H_SCALE;
        // f̃ = -u² + 4u³ - u⁴; f̃(1/2) = 3/16, f̃(1) = 2.
        assert_relative_eq!(tilde_fd(&g, 0.5, h).unwrap(), 0.1875, max_relative = 1e-6);
        assert_relative_eq!(tilde_fd(&g, 1.0, h).unwrap(), 2.0, max_relative = 1e-6);
    }

    #[test]
    fn fd_tilde_matches_closed_form_scale_free() {
        let g = f(0.7, 2.0, 1.3, 1.5, 2.5, 4.0);
        let tg = g.tilde().unwrap();
        for &u in &[1e-3, 0.2, 1.0, 7.0, 1e3] {
            let fd = tilde_fd(&g, u, DEFAULT_FD_H_SCALE).unwrap();
            let cf = tg.eval(u).unwrap();
            let scale = tilde_scale(&g, u).unwrap();
            assert!((fd - cf).abs() <= 1e-6 * scale, "u = {u}: fd {fd} vs cf {cf} (scale {scale})");
        }
    }

    #[test]
    fn fd_tilde_validates_inputs() {
        let g = f(1.0, 1.0, 1.0, 1.0, 2.0, 3.0);
        assert!(tilde_fd(&g, 0.0, 1e-3).is_err());
        assert!(tilde_fd(&g, -1.0, 1e-3).is_err());
        assert!(tilde_fd(&g, 1.0, 0.0).is_err());
        assert!(tilde_fd(&g, 1.0, 0.2).is_err());
    }
}
