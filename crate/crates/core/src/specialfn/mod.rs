//! Complex-argument special-function kernels: log-gamma, gamma ratios,
//! digamma, Pochhammer symbols and the complete elliptic integral K.
//!
//! All functions are pure. A value within [`POLE_TOLERANCE`] of a
//! non-positive integer counts as a pole and is reported as
//! [`Error::Pole`](crate::Error::Pole) rather than producing infinities.

mod digamma;
mod elliptic;
mod gamma;
mod pochhammer;

pub use digamma::digamma;
pub use elliptic::{agm, elliptic_k};
pub use gamma::{gamma, gamma_ratio, ln_gamma};
pub use pochhammer::pochhammer;

/// Distance below which an argument is treated as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;
