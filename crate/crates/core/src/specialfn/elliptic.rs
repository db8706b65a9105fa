use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_AGM_STEPS: usize = 64;

/// Arithmetic-geometric mean of two positive reals.
pub fn agm<T: Real>(mut a: T, mut b: T) -> T {
    for _ in 0..MAX_AGM_STEPS {
        if (a - b).abs() <= T::epsilon() * a {
            break;
        }
        let next = (a + b) * T::lit(0.5);
        b = (a * b).sqrt();
        a = next;
    }
    a
}

/// Complete elliptic integral of the first kind in the modulus convention:
/// K(k) = ∫₀^{π/2} dθ / √(1 - k² sin²θ) = π / (2 AGM(1, √(1-k²))).
pub fn elliptic_k<T: Real>(k: T) -> Result<T> {
    if !(k >= T::zero() && k < T::one()) {
        return Err(Error::Domain(format!("elliptic_k needs 0 <= k < 1, got {k}")));
    }
    let kp = ((T::one() - k) * (T::one() + k)).sqrt();
    Ok(T::PI() / (T::lit(2.0) * agm(T::one(), kp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    #[test]
    fn k_at_zero() {
        assert!((elliptic_k(0.0f64).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn lemniscatic_value() {
        let v = elliptic_k(FRAC_1_SQRT_2).unwrap();
        assert!((v - 1.854_074_677_301_371_9).abs() < 1e-14);
    }

    #[test]
    fn domain() {
        assert!(elliptic_k(1.0f64).is_err());
        assert!(elliptic_k(-0.1f64).is_err());
        assert!(elliptic_k(f64::NAN).is_err());
    }

    #[test]
    fn f32_kernel() {
        let v = elliptic_k(0.5f32).unwrap();
        assert!((v - 1.685_750_4).abs() < 1e-5);
    }
}
