//! Hypergeometric-type series with harmonic-number weights: coefficient
//! specs, incremental weights, the evaluation driver, sequence acceleration
//! and finite-difference derivatives.

mod accel;
mod diff;
mod eval;
mod harmonic;
mod spec;
mod weight;

pub use accel::{richardson_known_basis, richardson_unknowns, wynn_epsilon, WYNN_MAX_DEPTH, WYNN_MIN_LEN};
pub use diff::{finite_difference, finite_difference_with_step, DEFAULT_STEP};
pub use eval::{eval_hyper, eval_weighted, Method, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL, UNIT_ARGUMENT_TOL};
pub use harmonic::{generalized_harmonic, harmonic};
pub use spec::PochhammerRatioSeries;
pub use weight::{WeightKind, WeightState};
