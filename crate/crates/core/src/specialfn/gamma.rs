use num_complex::Complex;
use num_traits::{One, Zero};

use super::POLE_TOLERANCE;
use crate::error::{Error, Result};
use crate::scalar::{distance_to_nonpositive_integer, is_finite, Real};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn pole_check<T: Real>(z: Complex<T>, what: &str) -> Result<()> {
    match distance_to_nonpositive_integer(z) {
        Some(d) if d < T::lit(POLE_TOLERANCE) => Err(Error::Pole(format!("{what} at {}{:+}i", z.re, z.im))),
        _ => Ok(()),
    }
}

fn ln_gamma_lanczos<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let zm1 = z - T::one();
    let mut series = Complex::new(T::lit(LANCZOS_COEFFS[0]), T::zero());
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series = series + Complex::new(T::lit(c), T::zero()) / (zm1 + T::from_usize_lossy(k));
    }
    let t = zm1 + T::lit(LANCZOS_G) + half;
    let half_ln_two_pi = half * (T::lit(2.0) * T::PI()).ln();
    (zm1 + half) * t.ln() - t + series.ln() + half_ln_two_pi
}

/// Principal branch of log Γ(z): the continuation of the real log-gamma off
/// the positive axis, satisfying `ln_gamma(z + 1) = ln_gamma(z) + ln z`.
///
/// Lanczos for `Re z >= 1/2`; the reflection formula below that, with the
/// imaginary part moved onto the branch fixed by the recurrence.
pub fn ln_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    pole_check(z, "ln_gamma")?;
    let half = T::lit(0.5);
    if z.re >= half {
        return Ok(ln_gamma_lanczos(z));
    }

    let pi = T::PI();
    let one = Complex::<T>::one();
    let reflected = ln_gamma_lanczos(one - z);
    let sin_pi_z = (z * pi).sin();
    let mut value = Complex::new(pi.ln(), T::zero()) - sin_pi_z.ln() - reflected;

    // Phase of the recurrence route: Im lnΓ(z) = Im lnΓ(z + m) - Σ arg(z + k).
    let steps = (half - z.re).ceil().to_usize().unwrap_or(0);
    let shifted = z + T::from_usize_lossy(steps);
    let mut phase = ln_gamma_lanczos(shifted).im;
    for k in 0..steps {
        phase = phase - (z + T::from_usize_lossy(k)).arg();
    }
    let two_pi = T::lit(2.0) * pi;
    let turns = ((phase - value.im) / two_pi).round();
    value.im = value.im + turns * two_pi;

    if !is_finite(value) {
        return Err(Error::Evaluation(format!("ln_gamma overflow at {}{:+}i", z.re, z.im)));
    }
    Ok(value)
}

/// Γ(z) = exp(ln Γ(z)).
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let g = ln_gamma(z)?.exp();
    if !is_finite(g) {
        return Err(Error::Evaluation(format!("gamma overflow at {}{:+}i", z.re, z.im)));
    }
    Ok(g)
}

/// Γ(num₁)…Γ(num_p) / (Γ(den₁)…Γ(den_q)), summed in log space and
/// exponentiated once.
///
/// Poles are allowed only in matched numerator/denominator pairs: each
/// Γ(-m) is then replaced by its residue (-1)^m / m!, the common ε cancels.
pub fn gamma_ratio<T: Real>(numerators: &[Complex<T>], denominators: &[Complex<T>]) -> Result<Complex<T>> {
    let tol = T::lit(POLE_TOLERANCE);
    let mut log_sum = Complex::<T>::zero();
    let mut sign_flip = false;
    let mut pole_balance: i64 = 0;

    let mut accumulate = |z: Complex<T>, in_numerator: bool| -> Result<()> {
        let at_pole = distance_to_nonpositive_integer(z).is_some_and(|d| d < tol);
        let term = if at_pole {
            let m = (-z.re.round()).to_usize().unwrap_or(0);
            // residue of Γ at -m is (-1)^m / m!
            if m % 2 == 1 {
                sign_flip = !sign_flip;
            }
            pole_balance += if in_numerator { 1 } else { -1 };
            -ln_gamma(Complex::new(T::from_usize_lossy(m + 1), T::zero()))?
        } else {
            ln_gamma(z)?
        };
        if in_numerator {
            log_sum = log_sum + term;
        } else {
            log_sum = log_sum - term;
        }
        Ok(())
    };

    for &z in numerators {
        accumulate(z, true)?;
    }
    for &z in denominators {
        accumulate(z, false)?;
    }
    if pole_balance != 0 {
        let side = if pole_balance > 0 { "numerator" } else { "denominator" };
        return Err(Error::Pole(format!("unmatched gamma pole in {side}")));
    }

    let mut value = log_sum.exp();
    if sign_flip {
        value = -value;
    }
    if !is_finite(value) {
        return Err(Error::Evaluation("gamma ratio overflow".into()));
    }
    Ok(value)
}
