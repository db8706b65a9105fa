use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{distance_to_nonpositive_integer, is_nonpositive_integer, Real};
use crate::specialfn::POLE_TOLERANCE;

/// Coefficients of a hypergeometric-type series
///
/// ```text
///   t_n = r^n · Π (a_i)_n / ( Π (b_j)_n · (n!)^p ),   n ≥ n₀
/// ```
///
/// `numerator_shifts` are the a_i, `denominator_shifts` the b_j, `p` the
/// factorial power and `r` the per-term geometric factor. Plain ₚF_q is
/// `p = 1, r = 1, n₀ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PochhammerRatioSeries<T> {
    pub numerator_shifts: Vec<Complex<T>>,
    pub denominator_shifts: Vec<Complex<T>>,
    pub factorial_power: u32,
    pub geometric_ratio: Complex<T>,
    pub start_index: usize,
}

impl<T: Real> PochhammerRatioSeries<T> {
    pub fn new(numerator_shifts: Vec<Complex<T>>, denominator_shifts: Vec<Complex<T>>) -> Self {
        Self {
            numerator_shifts,
            denominator_shifts,
            factorial_power: 0,
            geometric_ratio: Complex::one(),
            start_index: 0,
        }
    }

    /// ₚF_q(a; b; x) coefficients.
    pub fn hypergeometric(numerators: Vec<Complex<T>>, denominators: Vec<Complex<T>>) -> Self {
        Self::new(numerators, denominators).with_factorial_power(1)
    }

    pub fn with_factorial_power(mut self, p: u32) -> Self {
        self.factorial_power = p;
        self
    }

    pub fn with_ratio(mut self, r: Complex<T>) -> Self {
        self.geometric_ratio = r;
        self
    }

    pub fn starting_at(mut self, n0: usize) -> Self {
        self.start_index = n0;
        self
    }

    /// Pole guard on the denominator shifts.
    pub fn validate(&self) -> Result<()> {
        let tol = T::lit(POLE_TOLERANCE);
        for b in &self.denominator_shifts {
            if is_nonpositive_integer(*b, tol) {
                return Err(Error::Pole(format!(
                    "denominator shift {}{:+}i is a non-positive integer",
                    b.re, b.im
                )));
            }
        }
        if self.start_index > 1 {
            return Err(Error::Domain(format!(
                "start index must be 0 or 1, got {}",
                self.start_index
            )));
        }
        Ok(())
    }

    /// t_{n+1} / t_n, excluding the argument power.
    pub fn term_ratio(&self, n: usize) -> Complex<T> {
        let nn = T::from_usize_lossy(n);
        let mut ratio = self.geometric_ratio;
        for a in &self.numerator_shifts {
            ratio = ratio * (*a + nn);
        }
        for b in &self.denominator_shifts {
            ratio = ratio / (*b + nn);
        }
        ratio / (nn + T::one()).powi(self.factorial_power as i32)
    }

    /// Last index with a possibly nonzero term when some numerator shift is
    /// a non-positive integer -m (then t_n = 0 for all n > m).
    pub fn terminating_index(&self) -> Option<usize> {
        let tol = T::lit(POLE_TOLERANCE);
        self.numerator_shifts
            .iter()
            .filter_map(|a| match distance_to_nonpositive_integer(*a) {
                Some(d) if d < tol => (-a.re.round()).to_usize(),
                _ => None,
            })
            .min()
    }

    /// Degree balance: numerator count minus (denominator count + p).
    fn degree_excess(&self) -> i64 {
        self.numerator_shifts.len() as i64 - self.denominator_shifts.len() as i64 - self.factorial_power as i64
    }

    /// lim |t_{n+1} x^{n+1} / (t_n x^n)|, or `None` when the ratio grows
    /// without bound.
    pub fn ratio_limit(&self, x: Complex<T>) -> Option<Complex<T>> {
        match self.degree_excess() {
            0 => Some(self.geometric_ratio * x),
            e if e < 0 => Some(Complex::zero()),
            _ => None,
        }
    }

    /// σ in t_n ~ C · λ^n · n^σ for a balanced series: Σa − Σb − p.
    pub fn algebraic_exponent(&self) -> Complex<T> {
        let sum_a = self.numerator_shifts.iter().fold(Complex::<T>::zero(), |s, a| s + a);
        let sum_b = self.denominator_shifts.iter().fold(Complex::<T>::zero(), |s, b| s + b);
        sum_a - sum_b - T::from_u32(self.factorial_power).expect("small integer")
    }
}
