//! Double-power nonlinearities and the existence/uniqueness thresholds.
//!
//! A [`DoublePower`] is the function
//!
//! ```text
//! g(u) = -ω·u + u^p - u^q,   ω > 0,   1 < p < q,
//! ```
//!
//! the canonical right-hand side for ground states of the scalar field
//! equation `Δu - ω·u + u^p - u^q = 0`. Two closed-form constants in `(p, q)`
//! decide everything:
//!
//! * `ω < ω_{p,q}` — the antiderivative `G(u) = ∫₀ᵘ g` has a positive part,
//!   which is exactly the existence condition for a ground state;
//! * `ω < η_{p,q}` — `g` itself has a positive part, which is the condition
//!   under which the ground state is unique.
//!
//! Both constants are instances of the triple-power classification threshold:
//! `ω_{p,q}` is twice the threshold of the antiderivative form and `η_{p,q}`
//! is the threshold of `g` itself (with `a` in the role of `ω`). Always
//! `ω_{p,q} < η_{p,q}`, so for `ω` between them a ground state exists but
//! uniqueness is no longer guaranteed by the sign structure alone.

use crate::error::{domain, Result};
use crate::power::TriplePower;
use crate::scalar::Real;

/// Existence threshold
/// `ω_{p,q} = 2(q-p)/((p+1)(q-1)) · [ (p-1)(q+1) / ((p+1)(q-1)) ]^{(p-1)/(q-p)}`.
///
/// A ground state of `Δu - ω·u + u^p - u^q = 0` exists iff `ω < ω_{p,q}`.
/// Requires `1 < p < q`.
pub fn omega_threshold<R: Real>(p: R, q: R) -> Result<R> {
    check_exponents(p, q)?;
    Ok(omega_threshold_unchecked(p, q))
}

/// Uniqueness threshold
/// `η_{p,q} = (q-p)/(q-1) · [ (p-1)/(q-1) ]^{(p-1)/(q-p)}`.
///
/// The ground state is unique when `ω < η_{p,q}`. Requires `1 < p < q`.
pub fn eta_threshold<R: Real>(p: R, q: R) -> Result<R> {
    check_exponents(p, q)?;
    Ok(eta_threshold_unchecked(p, q))
}

fn check_exponents<R: Real>(p: R, q: R) -> Result<()> {
    if !(p.is_finite() && q.is_finite() && R::one() < p && p < q) {
        return Err(domain(format!("thresholds require 1 < p < q; got p = {p}, q = {q}")));
    }
    Ok(())
}

fn omega_threshold_unchecked<R: Real>(p: R, q: R) -> R {
    let one = R::one();
    let two = R::of(2.0);
    let lead = two * (q - p) / ((p + one) * (q - one));
    let base = (p - one) * (q + one) / ((p + one) * (q - one));
    lead * base.powf((p - one) / (q - p))
}

fn eta_threshold_unchecked<R: Real>(p: R, q: R) -> R {
    let one = R::one();
    let lead = (q - p) / (q - one);
    let base = (p - one) / (q - one);
    lead * base.powf((p - one) / (q - p))
}

/// A double-power nonlinearity `g(u) = -ω·u + u^p - u^q`.
///
/// Invariants (enforced by [`DoublePower::new`]): `ω` positive and finite,
/// exponents finite with `1 < p < q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoublePower<R> {
    omega: R,
    p: R,
    q: R,
}

impl<R: Real> DoublePower<R> {
    /// Build a double-power function, validating all invariants.
    pub fn new(omega: R, p: R, q: R) -> Result<Self> {
        if !(omega.is_finite() && omega > R::zero()) {
            return Err(domain(format!("omega must be positive and finite; got {omega}")));
        }
        check_exponents(p, q)?;
        Ok(DoublePower { omega, p, q })
    }

    pub fn omega(&self) -> R {
        self.omega
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn q(&self) -> R {
        self.q
    }

    /// View `g` as the triple-power function `(a, b, c) = (ω, 1, 1)` with
    /// exponents `(1, p, q)`.
    pub fn as_triple(&self) -> TriplePower<R> {
        let one = R::one();
        TriplePower::new(self.omega, one, one, one, self.p, self.q)
            .expect("double-power invariants imply triple-power invariants")
    }

    /// The antiderivative `G(u) = -ω/2·u² + u^{p+1}/(p+1) - u^{q+1}/(q+1)`
    /// as a triple-power function.
    pub fn antiderivative(&self) -> TriplePower<R> {
        self.as_triple().antiderivative()
    }

    /// Existence threshold `ω_{p,q}` for these exponents.
    pub fn omega_threshold(&self) -> R {
        omega_threshold_unchecked(self.p, self.q)
    }

    /// Uniqueness threshold `η_{p,q}` for these exponents.
    pub fn eta_threshold(&self) -> R {
        eta_threshold_unchecked(self.p, self.q)
    }

    /// Whether a ground state is predicted to exist: `ω < ω_{p,q}` (strict).
    pub fn existence_predicted(&self) -> bool {
        self.omega < self.omega_threshold()
    }

    /// Whether the ground state is predicted unique: `ω < η_{p,q}` (strict).
    pub fn uniqueness_predicted(&self) -> bool {
        self.omega < self.eta_threshold()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power::TrichotomyCase;
    use approx::assert_relative_eq;

    #[test]
    fn omega_threshold_matches_hand_values() {
        // (3,5): 2·2/(4·4) · [2·6/(4·4)]^{2/2} = 1/4 · 3/4 = 3/16.
        assert_eq!(omega_threshold(3.0, 5.0).unwrap(), 0.1875);
        // (2,3): 2·1/(3·2) · [1·4/(3·2)]^{1/1} = 2/9.
        assert_relative_eq!(omega_threshold(2.0, 3.0).unwrap(), 2.0 / 9.0, max_relative = 1e-15);
        // (2,5): 2·3/(3·4) · [1·6/(3·4)]^{1/3} = 0.5·0.5^{1/3}.
        assert_relative_eq!(
            omega_threshold(2.0, 5.0).unwrap(),
            0.3968502629920499,
            max_relative = 1e-14
        );
    }

    #[test]
    fn eta_threshold_matches_hand_values() {
        // (3,5): (2/4)·[2/4]^{2/2} = 1/4.
        assert_eq!(eta_threshold(3.0, 5.0).unwrap(), 0.25);
        // (2,3): (1/2)·[1/2]^1 = 1/4.
        assert_relative_eq!(eta_threshold(2.0, 3.0).unwrap(), 0.25, max_relative = 1e-15);
        // (2,5): (3/4)·[1/4]^{1/3}.
        assert_relative_eq!(
            eta_threshold(2.0, 5.0).unwrap(),
            0.75 * 0.25_f64.powf(1.0 / 3.0),
            max_relative = 1e-14
        );
    }

    #[test]
    fn thresholds_reject_bad_exponents() {
        assert!(omega_threshold(1.0, 3.0).is_err());
        assert!(omega_threshold(3.0, 3.0).is_err());
        assert!(omega_threshold(3.0, 2.0).is_err());
        assert!(eta_threshold(0.5, 2.0).is_err());
        assert!(eta_threshold(2.0, f64::NAN).is_err());
    }

    #[test]
    fn constructor_validates() {
        assert!(DoublePower::new(0.0, 3.0, 5.0).is_err());
        assert!(DoublePower::new(-0.1, 3.0, 5.0).is_err());
        assert!(DoublePower::new(0.1, 1.0, 5.0).is_err());
        assert!(DoublePower::new(0.1, 3.0, 5.0).is_ok());
    }

    #[test]
    fn as_triple_and_antiderivative_match_hand_values() {
        let g = DoublePower::new(0.1, 3.0, 5.0).unwrap();
        let t = g.as_triple();
        assert_eq!(t.coefficients(), (0.1, 1.0, 1.0));
        assert_eq!(t.exponents(), (1.0, 3.0, 5.0));

        let big_g = g.antiderivative();
        assert_eq!(big_g.coefficients(), (0.05, 0.25, 1.0 / 6.0));
        assert_eq!(big_g.exponents(), (2.0, 4.0, 6.0));
    }

    #[test]
    fn predicates_match_hand_checks() {
        // ω_{3,5} = 0.1875, η_{3,5} = 0.25.
        assert!(DoublePower::new(0.1, 3.0, 5.0).unwrap().existence_predicted());
        assert!(!DoublePower::new(0.21, 3.0, 5.0).unwrap().existence_predicted());
        assert!(DoublePower::new(0.21, 3.0, 5.0).unwrap().uniqueness_predicted());
        assert!(!DoublePower::new(0.3, 3.0, 5.0).unwrap().uniqueness_predicted());
        assert!(DoublePower::new(0.1, 2.0, 3.0).unwrap().uniqueness_predicted());
        // Exactly at a threshold the strict inequality makes the predicate false.
        assert!(!DoublePower::new(0.1875, 3.0, 5.0).unwrap().existence_predicted());
        assert!(!DoublePower::new(0.25, 3.0, 5.0).unwrap().uniqueness_predicted());
    }

    #[test]
    fn omega_is_twice_the_antiderivative_threshold() {
        for &(p, q) in &[(2.0, 3.0), (3.0, 5.0), (1.5, 4.0), (2.2, 7.3)] {
            let g = DoublePower::new(0.1, p, q).unwrap();
            assert_relative_eq!(
                g.omega_threshold(),
                2.0 * g.antiderivative().threshold(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn eta_is_the_triple_power_threshold() {
        for &(p, q) in &[(2.0, 3.0), (3.0, 5.0), (1.5, 4.0), (2.2, 7.3)] {
            let g = DoublePower::new(0.1, p, q).unwrap();
            assert_relative_eq!(g.eta_threshold(), g.as_triple().threshold(), max_relative = 1e-13);
        }
    }

    #[test]
    fn existence_agrees_with_antiderivative_classification() {
        for &omega in &[0.05, 0.15, 0.1875 * 0.999, 0.1875 * 1.001, 0.3] {
            let g = DoublePower::new(omega, 3.0, 5.0).unwrap();
            let case = g.antiderivative().classify(1e-12).unwrap();
            assert_eq!(g.existence_predicted(), case == TrichotomyCase::PositivePart);
        }
    }
}
