//! Scalar abstraction shared by the special-function kernels and the series
//! engine. Everything numeric is generic over [`Real`] and operates on
//! `Complex<T>`; the catalog and CLI pin `T = f64`.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point type the kernels can run on: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("index representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Build a complex value from a real literal.
pub fn cplx<T: Real>(re: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::zero())
}

/// Distance from `z` to the nearest non-positive integer, or `None` when the
/// nearest integer is positive.
pub(crate) fn distance_to_nonpositive_integer<T: Real>(z: Complex<T>) -> Option<T> {
    let nearest = z.re.round();
    if nearest > T::zero() {
        return None;
    }
    Some(Complex::new(z.re - nearest, z.im).norm())
}

/// True when `z` lies within `tol` of one of 0, -1, -2, ...
pub fn is_nonpositive_integer<T: Real>(z: Complex<T>, tol: T) -> bool {
    distance_to_nonpositive_integer(z).is_some_and(|d| d < tol)
}

/// Componentwise finiteness.
pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
