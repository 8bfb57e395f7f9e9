//! Floating-point scalar abstraction.
//!
//! Everything in this crate that does arithmetic is generic over [`Real`],
//! which is implemented for `f32` and `f64`. Tolerances and stencil weights
//! are written as `f64` literals and converted through [`Real::of`]; both
//! supported types represent those constants without surprises.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar type: `f32` or `f64`.
///
/// The bound is a thin alias over `num_traits::Float` plus conversions and
/// formatting; algorithms in this crate need transcendental functions
/// (`powf`, `exp`, `ln`, `ln_1p`) and conversion from `f64` constants.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + 'static {
    /// Convert an `f64` constant (tolerance, grid weight, default) into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `u^k` for `u > 0`, routing small integer exponents through `powi`.
///
/// Exact-integer exponents are common (derivative orders shift p, q, r by
/// whole numbers, and many inputs use integer exponents); `powi` is several
/// times cheaper than `powf` and this sits on the integrator's hot path.
#[inline]
pub(crate) fn upow<R: Real>(u: R, k: R) -> R {
    if k.fract() == R::zero() && k.abs() <= R::of(64.0) {
        u.powi(k.to_i32().expect("small integer exponent"))
    } else {
        u.powf(k)
    }
}
