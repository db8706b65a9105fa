//! Numerical verification of harmonic-number series identities that follow
//! from quadratic transformations of Gauss and generalized hypergeometric
//! functions.
//!
//! * [`specialfn`]: complex log-gamma, gamma ratios, digamma, Pochhammer,
//!   complete elliptic integral K.
//! * [`series`]: weighted hypergeometric series, Wynn ε and known-exponent
//!   Richardson acceleration, finite-difference derivatives.
//! * [`catalog`]: the identity registry, closed-form expression trees and
//!   the verification engine.
//! * [`cli`]: the `hyperharmonic` command-line front end.
//!
//! Kernels and the series engine are generic over [`Real`] (`f32`/`f64`);
//! the catalog works in double precision through the aliases below.

// Series coefficients and reference values are kept at full published
// precision even where f64 rounds them.
#![allow(clippy::excessive_precision)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod scalar;
pub mod series;
pub mod specialfn;

pub use error::{Error, Result};
pub use scalar::Real;

/// Complex double: the numeric carrier of the catalog and CLI.
pub type ComplexValue = num_complex::Complex<f64>;
/// Single-precision complex value for the generic kernels.
pub type ComplexValue32 = num_complex::Complex<f32>;
/// Double-precision series specification.
pub type Series64 = series::PochhammerRatioSeries<f64>;
/// Double-precision term weight.
pub type Weight64 = series::WeightKind<f64>;
/// Double-precision series result.
pub type SeriesResult64 = series::SeriesResult<f64>;
