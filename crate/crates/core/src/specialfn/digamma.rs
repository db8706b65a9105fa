use num_complex::Complex;
use num_traits::One;

use super::POLE_TOLERANCE;
use crate::error::{Error, Result};
use crate::scalar::{is_finite, is_nonpositive_integer, Real};

// B_{2k} / (2k) for k = 1..=7
const ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

const SHIFT_THRESHOLD: f64 = 8.0;

/// ψ(z) = Γ'(z)/Γ(z).
///
/// Reflection below `Re z = 1/2`, upward recurrence to `Re z >= 8`, then the
/// Bernoulli asymptotic series through the B₁₄ term.
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z, T::lit(POLE_TOLERANCE)) {
        return Err(Error::Pole(format!("digamma at {}{:+}i", z.re, z.im)));
    }
    let value = if z.re < T::lit(0.5) {
        let pi = T::PI();
        let (s, c) = ((z * pi).sin(), (z * pi).cos());
        digamma_right(Complex::<T>::one() - z) - c / s * pi
    } else {
        digamma_right(z)
    };
    if !is_finite(value) {
        return Err(Error::Evaluation(format!("digamma overflow at {}{:+}i", z.re, z.im)));
    }
    Ok(value)
}

fn digamma_right<T: Real>(mut z: Complex<T>) -> Complex<T> {
    let mut shift = Complex::new(T::zero(), T::zero());
    while z.re < T::lit(SHIFT_THRESHOLD) {
        shift = shift + z.inv();
        z = z + T::one();
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(T::zero(), T::zero());
    let mut power = inv2;
    for &c in &ASYMPTOTIC {
        series = series + power * T::lit(c);
        power = power * inv2;
    }
    z.ln() - inv * T::lit(0.5) - series - shift
}
