use num_complex::Complex;
use num_traits::One;

use super::gamma::gamma_ratio;
use crate::error::Result;
use crate::scalar::Real;

const DIRECT_PRODUCT_LIMIT: usize = 64;

/// Rising factorial (a)_n = a(a+1)…(a+n-1), with (a)_0 = 1.
///
/// Direct product up to n = 64, log-gamma ratio beyond. Terminating
/// symbols (a a non-positive integer with n > -a) give exactly zero.
pub fn pochhammer<T: Real>(a: Complex<T>, n: usize) -> Result<Complex<T>> {
    if n <= DIRECT_PRODUCT_LIMIT {
        let mut acc = Complex::<T>::one();
        for k in 0..n {
            acc = acc * (a + T::from_usize_lossy(k));
        }
        return Ok(acc);
    }
    if a.im == T::zero() && a.re <= T::zero() && a.re == a.re.round() {
        let m = (-a.re).to_usize().unwrap_or(usize::MAX);
        if n > m {
            return Ok(Complex::new(T::zero(), T::zero()));
        }
    }
    gamma_ratio(&[a + T::from_usize_lossy(n)], &[a])
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    #[test]
    fn small_values() {
        assert_eq!(pochhammer(C::new(0.37, 1.2), 0).unwrap(), C::one());
        assert_eq!(pochhammer(C::new(1.0, 0.0), 6).unwrap(), C::new(720.0, 0.0));
        assert_eq!(pochhammer(C::new(0.5, 0.0), 3).unwrap(), C::new(1.875, 0.0));
    }

    #[test]
    fn terminating_symbol_is_zero() {
        assert_eq!(pochhammer(C::new(-2.0, 0.0), 5).unwrap(), C::new(0.0, 0.0));
        assert_eq!(pochhammer(C::new(-2.0, 0.0), 100).unwrap(), C::new(0.0, 0.0));
        assert_eq!(pochhammer(C::new(-2.0, 0.0), 2).unwrap(), C::new(2.0, 0.0));
    }

    #[test]
    fn gamma_route_matches_product() {
        let a = C::new(0.3, -0.4);
        let direct = (0..80).fold(C::one(), |acc, k| acc * (a + k as f64));
        let via_gamma = pochhammer(a, 80).unwrap();
        assert!((direct - via_gamma).norm() < 1e-12 * direct.norm());
    }
}
