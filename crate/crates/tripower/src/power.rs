//! Triple-power nonlinearities and their trichotomy.
//!
//! A [`TriplePower`] is the function
//!
//! ```text
//! f(u) = -a·u^p + b·u^q - c·u^r,   a, b, c > 0,   0 < p < q < r,   u ≥ 0
//! ```
//!
//! Whether `f` has a positive part is decided by comparing `a` against the
//! closed-form threshold
//!
//! ```text
//! T = b·(r-q)/(r-p) · [ b·(q-p) / (c·(r-p)) ]^{(q-p)/(r-q)}
//!   = max_{u>0} ( b·u^{q-p} - c·u^{r-p} ),
//! ```
//!
//! giving exactly one of three cases: `a < T` (two sign changes, positive
//! hump), `a = T` (a single double zero), or `a > T` (strictly negative on
//! `u > 0`). The same trichotomy applies to the transformed function
//!
//! ```text
//! f̃(u) = (u·f'(u))'·f(u) - u·f'(u)²,
//! ```
//!
//! which is again a triple-power function (see [`TriplePower::tilde`]) and
//! lands in the *opposite* outer case: `f` has a positive part iff `f̃` is
//! negative, and the boundary cases coincide.

use crate::error::{domain, Result};
use crate::scalar::{upow, Real};

/// Outcome of the sign trichotomy for a triple-power function on `u > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrichotomyCase {
    /// Case (a): `a < T`; the function has two sign changes `z1 < z2` and is
    /// positive between them.
    PositivePart,
    /// Case (b): `a = T` (within tolerance); the function is nonpositive with
    /// a single double zero at the turning point.
    OneZero,
    /// Case (c): `a > T`; the function is strictly negative on `u > 0`.
    Negative,
}

impl TrichotomyCase {
    /// Conventional single-letter label: `a`, `b`, or `c`.
    pub fn letter(self) -> &'static str {
        match self {
            TrichotomyCase::PositivePart => "a",
            TrichotomyCase::OneZero => "b",
            TrichotomyCase::Negative => "c",
        }
    }

    /// Human-readable description of the case.
    pub fn describe(self) -> &'static str {
        match self {
            TrichotomyCase::PositivePart => "positive part (two sign changes)",
            TrichotomyCase::OneZero => "single double zero",
            TrichotomyCase::Negative => "strictly negative",
        }
    }

    /// The case the tilde transform of a function in this case lands in:
    /// the outer cases swap, the boundary case is preserved.
    pub fn dual(self) -> Self {
        match self {
            TrichotomyCase::PositivePart => TrichotomyCase::Negative,
            TrichotomyCase::OneZero => TrichotomyCase::OneZero,
            TrichotomyCase::Negative => TrichotomyCase::PositivePart,
        }
    }
}

/// A triple-power function `f(u) = -a·u^p + b·u^q - c·u^r`.
///
/// Invariants (enforced by [`TriplePower::new`]): `a, b, c` positive and
/// finite, exponents finite with `0 < p < q < r` strictly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriplePower<R> {
    a: R,
    b: R,
    c: R,
    p: R,
    q: R,
    r: R,
}

impl<R: Real> TriplePower<R> {
    /// Build a triple-power function, validating all invariants.
    pub fn new(a: R, b: R, c: R, p: R, q: R, r: R) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !(v.is_finite() && v > R::zero()) {
                return Err(domain(format!(
                    "coefficients must be positive and finite; got {name} = {v}"
                )));
            }
        }
        if !(p.is_finite() && q.is_finite() && r.is_finite()) {
            return Err(domain(format!("exponents must be finite; got p = {p}, q = {q}, r = {r}")));
        }
        if !(R::zero() < p && p < q && q < r) {
            return Err(domain(format!(
                "exponents must satisfy 0 < p < q < r; got p = {p}, q = {q}, r = {r}"
            )));
        }
        Ok(TriplePower { a, b, c, p, q, r })
    }

    pub fn a(&self) -> R {
        self.a
    }

    pub fn b(&self) -> R {
        self.b
    }

    pub fn c(&self) -> R {
        self.c
    }

    /// Exponents `(p, q, r)`.
    pub fn exponents(&self) -> (R, R, R) {
        (self.p, self.q, self.r)
    }

    /// Coefficients `(a, b, c)` of the signs-fixed form `-a·u^p + b·u^q - c·u^r`.
    pub fn coefficients(&self) -> (R, R, R) {
        (self.a, self.b, self.c)
    }

    /// Evaluate `f(u)` for `u ≥ 0`.
    ///
    /// Never returns NaN: when individual terms overflow, the dominant term
    /// decides the (possibly infinite) result via log-domain balancing.
    pub fn eval(&self, u: R) -> Result<R> {
        if !(u >= R::zero()) {
            return Err(domain(format!("eval requires u >= 0; got u = {u}")));
        }
        Ok(self.eval_raw(u))
    }

    /// `f(u)` without the domain check; `u ≥ 0` assumed.
    pub(crate) fn eval_raw(&self, u: R) -> R {
        if u == R::zero() {
            return R::zero();
        }
        signed_power_sum([(-self.a, self.p), (self.b, self.q), (-self.c, self.r)], u)
    }

    /// Evaluate `f'(u)` (`order = 1`) or `f''(u)` (`order = 2`) for `u > 0`.
    pub fn eval_derivative(&self, u: R, order: u32) -> Result<R> {
        if !(u > R::zero()) {
            return Err(domain(format!("eval_derivative requires u > 0; got u = {u}")));
        }
        let one = R::one();
        let terms = match order {
            1 => [
                (-self.a * self.p, self.p - one),
                (self.b * self.q, self.q - one),
                (-self.c * self.r, self.r - one),
            ],
            2 => [
                (-self.a * self.p * (self.p - one), self.p - R::of(2.0)),
                (self.b * self.q * (self.q - one), self.q - R::of(2.0)),
                (-self.c * self.r * (self.r - one), self.r - R::of(2.0)),
            ],
            _ => return Err(domain(format!("derivative order must be 1 or 2; got {order}"))),
        };
        Ok(signed_power_sum(terms, u))
    }

    /// The classification threshold `T` for the coefficient `a`.
    ///
    /// May overflow to `+inf` (or underflow to `0`) for extreme parameters;
    /// [`TriplePower::log_threshold`] stays finite in those regimes.
    pub fn threshold(&self) -> R {
        if let Some(t) = self.threshold_linear() {
            t
        } else {
            self.log_threshold_composed().exp()
        }
    }

    /// `ln T`, computed without intermediate overflow.
    pub fn log_threshold(&self) -> R {
        if let Some(t) = self.threshold_linear() {
            t.ln()
        } else {
            self.log_threshold_composed()
        }
    }

    /// Direct evaluation of `T`; `None` when it leaves the normal range.
    fn threshold_linear(&self) -> Option<R> {
        let (s, t, st) = self.gaps();
        let base = self.b * s / (self.c * st);
        if !(base.is_finite() && base > R::zero()) {
            return None;
        }
        let val = (self.b * t / st) * base.powf(s / t);
        (val.is_finite() && val > R::zero()).then_some(val)
    }

    /// `ln T` assembled from logarithms of the factors.
    fn log_threshold_composed(&self) -> R {
        let (s, t, st) = self.gaps();
        let log_base = self.b.ln() + s.ln() - self.c.ln() - st.ln();
        self.b.ln() + t.ln() - st.ln() + (s / t) * log_base
    }

    /// The turning point `u* = [ b·(q-p) / (c·(r-p)) ]^{1/(r-q)}`, the unique
    /// maximizer of `b·u^{q-p} - c·u^{r-p}` (and the double zero in the
    /// boundary case).
    pub fn turning_point(&self) -> R {
        let (s, t, st) = self.gaps();
        let base = self.b * s / (self.c * st);
        if base.is_finite() && base > R::zero() {
            let val = base.powf(t.recip());
            if val.is_finite() && val > R::zero() {
                return val;
            }
        }
        self.log_turning_point().exp()
    }

    /// `ln u*`, computed without intermediate overflow.
    pub fn log_turning_point(&self) -> R {
        let (s, t, st) = self.gaps();
        (self.b.ln() + s.ln() - self.c.ln() - st.ln()) / t
    }

    /// Classify the sign structure of `f` on `u > 0`.
    ///
    /// The boundary band `|a - T| ≤ rel_tol·max(a, T)` maps to the log-space
    /// test `|ln a - ln T| ≤ -ln(1 - rel_tol)`, which is how it is evaluated;
    /// this keeps the decision exact even where `T` itself overflows.
    ///
    /// `rel_tol` must lie in `(0, 1e-6]`.
    pub fn classify(&self, rel_tol: R) -> Result<TrichotomyCase> {
        if !(rel_tol > R::zero() && rel_tol <= R::of(1e-6)) {
            return Err(domain(format!(
                "classification tolerance must lie in (0, 1e-6]; got {rel_tol}"
            )));
        }
        let gap = self.a.ln() - self.log_threshold();
        let band = -(-rel_tol).ln_1p();
        Ok(if gap.abs() <= band {
            TrichotomyCase::OneZero
        } else if gap < R::zero() {
            TrichotomyCase::PositivePart
        } else {
            TrichotomyCase::Negative
        })
    }

    /// The transformed function `f̃(u) = (u·f'(u))'·f(u) - u·f'(u)²`.
    ///
    /// For a triple-power `f` this is again triple-power:
    ///
    /// ```text
    /// f̃(u) = -a·b·(q-p)²·u^{p+q-1} + c·a·(r-p)²·u^{p+r-1} - b·c·(r-q)²·u^{q+r-1}
    /// ```
    ///
    /// Requires `p + q > 1` so that the smallest transformed exponent is
    /// positive; returns a domain error otherwise.
    pub fn tilde(&self) -> Result<Self> {
        let one = R::one();
        if !(self.p + self.q > one) {
            return Err(domain(format!(
                "tilde requires p + q > 1; got p = {}, q = {}",
                self.p, self.q
            )));
        }
        let (s, t, st) = self.gaps();
        TriplePower::new(
            self.a * self.b * s * s,
            self.c * self.a * st * st,
            self.b * self.c * t * t,
            self.p + self.q - one,
            self.p + self.r - one,
            self.q + self.r - one,
        )
    }

    /// The antiderivative `F(u) = ∫₀ᵘ f`, again a triple-power function:
    ///
    /// ```text
    /// F(u) = -a/(p+1)·u^{p+1} + b/(q+1)·u^{q+1} - c/(r+1)·u^{r+1}
    /// ```
    pub fn antiderivative(&self) -> Self {
        let one = R::one();
        TriplePower {
            a: self.a / (self.p + one),
            b: self.b / (self.q + one),
            c: self.c / (self.r + one),
            p: self.p + one,
            q: self.q + one,
            r: self.r + one,
        }
    }

    /// `f(u)/(a·u^p) + ... ` — precisely `(b·u^{q-p} - c·u^{r-p})/a - 1`, the
    /// scaled bracket whose sign trichotomy matches `f`'s. NaN-free for all
    /// `u > 0`; overflowing regimes resolve to `±inf` by dominant-term logs.
    pub(crate) fn bracket_ratio(&self, u: R) -> R {
        let (s, _, st) = self.gaps();
        let one = R::one();
        let x1 = (self.b / self.a) * upow(u, s);
        let x2 = (self.c / self.a) * upow(u, st);
        if x1.is_finite() && x2.is_finite() {
            return x1 - x2 - one;
        }
        let lu = u.ln();
        let l1 = self.b.ln() - self.a.ln() + s * lu;
        let l2 = self.c.ln() - self.a.ln() + st * lu;
        let e1 = l1.exp();
        let e2 = l2.exp();
        if e1.is_infinite() && e2.is_infinite() {
            // Both terms overflow; the larger exponent wins the difference.
            if l1 > l2 {
                R::infinity()
            } else if l1 < l2 {
                R::neg_infinity()
            } else {
                -one
            }
        } else {
            e1 - e2 - one
        }
    }

    /// Exponent gaps `(q-p, r-q, r-p)`.
    pub(crate) fn gaps(&self) -> (R, R, R) {
        (self.q - self.p, self.r - self.q, self.r - self.p)
    }
}

/// Sum of signed power terms `Σ cᵢ·u^{kᵢ}` at `u > 0`, NaN-free.
///
/// The naive sum is used when every term is finite (one `powf` per term,
/// sub-ulp accurate). When a term overflows, the sum is re-balanced in log
/// space around the dominant magnitude so the result is a correctly signed
/// value (possibly `±inf`) instead of `inf - inf = NaN`.
fn signed_power_sum<R: Real, const N: usize>(terms: [(R, R); N], u: R) -> R {
    let zero = R::zero();
    let mut naive = zero;
    let mut finite = true;
    for (coef, k) in terms {
        if coef == zero {
            continue;
        }
        let t = coef * upow(u, k);
        if !t.is_finite() {
            finite = false;
            break;
        }
        naive = naive + t;
    }
    if finite {
        return naive;
    }

    let lu = u.ln();
    let mut logs = [zero; N];
    let mut top = R::neg_infinity();
    for (i, (coef, k)) in terms.iter().enumerate() {
        if *coef == zero {
            logs[i] = R::neg_infinity();
            continue;
        }
        logs[i] = coef.abs().ln() + *k * lu;
        top = top.max(logs[i]);
    }
    let mut balance = zero;
    for (i, (coef, _)) in terms.iter().enumerate() {
        if *coef == zero {
            continue;
        }
        balance = balance + coef.signum() * (logs[i] - top).exp();
    }
    if balance == zero {
        return zero;
    }
    balance.signum() * (top + balance.abs().ln()).exp()
}
