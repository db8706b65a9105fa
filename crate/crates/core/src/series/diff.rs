use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Base step of [`finite_difference`].
pub const DEFAULT_STEP: f64 = 1e-3;

/// First or second derivative of `f` at `c0` along the real direction:
/// central differences at steps h and h/2 combined by one Richardson step.
pub fn finite_difference<T, F>(f: F, c0: Complex<T>, order: u32) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    finite_difference_with_step(f, c0, order, T::lit(DEFAULT_STEP))
}

pub fn finite_difference_with_step<T, F>(f: F, c0: Complex<T>, order: u32, h: T) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    if h.is_nan() || h <= T::zero() {
        return Err(Error::Domain("finite-difference step must be positive".into()));
    }
    let coarse = central(&f, c0, order, h)?;
    let fine = central(&f, c0, order, h * T::lit(0.5))?;
    Ok((fine * T::lit(4.0) - coarse) / T::lit(3.0))
}

fn central<T, F>(f: &F, c0: Complex<T>, order: u32, h: T) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    match order {
        1 => Ok((f(c0 + h)? - f(c0 - h)?) / (h * T::lit(2.0))),
        2 => Ok((f(c0 + h)? - f(c0)? * T::lit(2.0) + f(c0 - h)?) / (h * h)),
        _ => Err(Error::Domain(format!(
            "finite_difference supports order 1 or 2, got {order}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{generalized_harmonic, harmonic};
    use crate::specialfn::gamma_ratio;

    fn beta_ratio(n: usize) -> impl Fn(Complex<f64>) -> Result<Complex<f64>> {
        move |c| {
            let one = Complex::new(1.0, 0.0);
            let nn = Complex::new(n as f64, 0.0);
            gamma_ratio(&[c + one, nn + one], &[c + nn + one])
        }
    }

    #[test]
    fn polynomial_derivative() {
        let d = finite_difference(|c: Complex<f64>| Ok(c * c), Complex::new(1.5, 0.0), 1).unwrap();
        assert!((d.re - 3.0).abs() < 1e-10);
    }

    #[test]
    fn derivative_lemma_small_cases() {
        let zero = Complex::new(0.0, 0.0);
        let d1 = finite_difference(beta_ratio(1), zero, 1).unwrap();
        assert!((d1.re + 1.0).abs() < 1e-6);
        let d2 = finite_difference(beta_ratio(3), zero, 2).unwrap();
        let h = 11.0 / 6.0;
        assert!((d2.re - (h * h + 49.0 / 36.0)).abs() < 1e-6);
    }

    #[test]
    fn derivative_lemma_up_to_fifty() {
        let zero = Complex::new(0.0, 0.0);
        for n in 1..=50 {
            let hn: f64 = harmonic(n);
            let d1 = finite_difference(beta_ratio(n), zero, 1).unwrap();
            let d2 = finite_difference(beta_ratio(n), zero, 2).unwrap();
            assert!((d1.re + hn).abs() < 1e-6, "n = {n}");
            assert!(
                (d2.re - (hn * hn + generalized_harmonic::<f64>(n, 2))).abs() < 1e-6,
                "n = {n}"
            );
        }
    }

    #[test]
    fn unsupported_order_and_errors_propagate() {
        let zero = Complex::new(0.0, 0.0);
        assert!(matches!(
            finite_difference(beta_ratio(2), zero, 3),
            Err(Error::Domain(_))
        ));
        let failing = |_c: Complex<f64>| -> Result<Complex<f64>> { Err(Error::Evaluation("boom".into())) };
        assert_eq!(
            finite_difference(failing, zero, 1),
            Err(Error::Evaluation("boom".into()))
        );
    }
}
