//! Triple-power nonlinearities, their sign trichotomy, and radial ground
//! states.
//!
//! The crate has three layers:
//!
//! * **Closed forms** — [`TriplePower`] implements the exact trichotomy of
//!   `f(u) = -a·u^p + b·u^q - c·u^r` via the classification threshold, the
//!   tilde transform `f̃ = (u·f')'·f - u·(f')²`, and antiderivatives.
//!   [`DoublePower`] specializes to `-ω·u + u^p - u^q` and exposes the
//!   existence threshold `ω_{p,q}` and uniqueness threshold `η_{p,q}`.
//! * **Numeric oracles** — [`oracle`] re-derives the classification and the
//!   sign-change structure from dense grid scans, bisection, and finite
//!   differences, sharing nothing with the closed forms beyond plain
//!   evaluation. The [`verify`] module cross-checks both layers against each
//!   other over seeded random instances.
//! * **Shooting** — [`shooting`] integrates the radial equation
//!   `u'' + (n-1)/r·u' + f(u) = 0` and locates ground states by bisecting the
//!   initial amplitude between crossing and rebound trajectories.
//!
//! All numeric code is generic over the scalar type via [`Real`] (`f32` or
//! `f64`); the `*64` aliases fix the common choice.
//!
//! ```
//! use tripower::{TriplePower64, TrichotomyCase};
//!
//! let f = TriplePower64::new(0.125, 1.0, 1.0, 1.0, 2.0, 3.0)?;
//! assert_eq!(f.classify(1e-12)?, TrichotomyCase::PositivePart);
//! assert_eq!(f.tilde()?.classify(1e-12)?, TrichotomyCase::Negative);
//! # Ok::<(), tripower::Error>(())
//! ```

// Validation guards use `!(x > y)` rather than `x <= y` on purpose: the
// negated comparison also rejects NaN, which the flipped operator would
// silently let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod double;
pub mod error;
pub mod oracle;
pub mod power;
pub mod rng;
pub mod scalar;
pub mod shooting;
pub mod verify;

pub use double::{eta_threshold, omega_threshold, DoublePower};
pub use error::{Error, Result};
pub use power::{TrichotomyCase, TriplePower};
pub use scalar::Real;

/// [`TriplePower`] over `f64`.
pub type TriplePower64 = TriplePower<f64>;
/// [`DoublePower`] over `f64`.
pub type DoublePower64 = DoublePower<f64>;
/// [`shooting::ShootingConfig`] over `f64`.
pub type ShootingConfig64 = shooting::ShootingConfig<f64>;
/// [`shooting::Trajectory`] over `f64`.
pub type Trajectory64 = shooting::Trajectory<f64>;
/// [`shooting::GroundState`] over `f64`.
pub type GroundState64 = shooting::GroundState<f64>;
/// [`oracle::ScanConfig`] over `f64`.
pub type ScanConfig64 = oracle::ScanConfig<f64>;
