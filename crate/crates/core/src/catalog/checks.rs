//! Checks on the generating function ₂F₁-family beyond plain two-sided
//! identities: the differential equation, the logarithmic boundary
//! behaviour, and the terminating instances of the ln 2 relation.

use super::point::Point;
use super::verify::{standard, VerificationResult, VerifyOptions};
use crate::error::{Error, Result};
use crate::series::{
    eval_hyper, eval_weighted, finite_difference_with_step, PochhammerRatioSeries, WeightKind, DEFAULT_MAX_TERMS,
};
use crate::ComplexValue;

/// Summation tolerance for the functions differentiated numerically.
const ODE_SERIES_TOL: f64 = 1e-15;
/// Term cap for ₂F₁(a, 1−a; 1; 1−x) at tiny x.
pub const BOUNDARY_MAX_TERMS: usize = 4_000_000;
const BOUNDARY_TOL: f64 = 1e-11;
const BOUNDARY_MAX_X: f64 = 1e-3;

/// Which function the operator x(1−x)D² + (1−2x)D − a(1−a) is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeSubject {
    /// Σ (a)ₙ(1−a)ₙ/(n!)² Hₙ xⁿ, compared against d/dx ₂F₁(a, 1−a; 1; x).
    GeneratingFunction,
    /// ₂F₁(a, 1−a; 1; x) itself, compared against 0.
    Homogeneous,
}

fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

fn legendre_spec(a: ComplexValue) -> PochhammerRatioSeries<f64> {
    PochhammerRatioSeries::new(vec![a, 1.0 - a], vec![]).with_factorial_power(2)
}

fn legendre(a: ComplexValue, x: ComplexValue, tol: f64, max_terms: usize) -> Result<ComplexValue> {
    Ok(eval_hyper(&legendre_spec(a), x, tol, max_terms)?.value)
}

fn generating_function(a: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    let spec = legendre_spec(a).starting_at(1);
    Ok(eval_weighted(
        &spec,
        &WeightKind::harmonic(1),
        x,
        ODE_SERIES_TOL,
        DEFAULT_MAX_TERMS,
        false,
    )?
    .value)
}

fn check_not_integer(a: ComplexValue) -> Result<()> {
    if (a - a.re.round()).norm() <= 1e-12 {
        Err(Error::Domain(format!("a = {a} must not be an integer")))
    } else {
        Ok(())
    }
}

/// Max over the grid of |L v − f| / max(1, |f|) for the generating function
/// v of the harmonic-weighted ₂F₁(a, 1−a; 1; x) series.
pub fn ode_residual(a: ComplexValue, x_grid: &[f64], h: f64) -> Result<f64> {
    ode_residual_for(OdeSubject::GeneratingFunction, a, x_grid, h)
}

pub fn ode_residual_for(subject: OdeSubject, a: ComplexValue, x_grid: &[f64], h: f64) -> Result<f64> {
    check_not_integer(a)?;
    if !(h > 0.0 && h < 0.25) {
        return Err(Error::Domain(format!("step h = {h} must lie in (0, 1/4)")));
    }
    if x_grid.is_empty() {
        return Err(Error::Domain("empty x grid".into()));
    }
    let product = a * (1.0 - a);
    let mut worst: f64 = 0.0;
    for &x in x_grid {
        if !(x > 2.0 * h && x < 1.0 - 2.0 * h) {
            return Err(Error::Domain(format!("grid point {x} is outside (2h, 1-2h)")));
        }
        let v = |y: ComplexValue| match subject {
            OdeSubject::GeneratingFunction => generating_function(a, y),
            OdeSubject::Homogeneous => legendre(a, y, ODE_SERIES_TOL, DEFAULT_MAX_TERMS),
        };
        let at = real(x);
        let value = v(at)?;
        let d1 = finite_difference_with_step(v, at, 1, h)?;
        let d2 = finite_difference_with_step(v, at, 2, h)?;
        let operator = x * (1.0 - x) * d2 + (1.0 - 2.0 * x) * d1 - product * value;
        let target = match subject {
            // d/dx ₂F₁(a, 1−a; 1; x) = a(1−a) ₂F₁(a+1, 2−a; 2; x)
            OdeSubject::GeneratingFunction => {
                let spec = PochhammerRatioSeries::hypergeometric(vec![a + 1.0, 2.0 - a], vec![real(2.0)]);
                product * eval_hyper(&spec, at, ODE_SERIES_TOL, DEFAULT_MAX_TERMS)?.value
            }
            OdeSubject::Homogeneous => real(0.0),
        };
        let scale = match subject {
            OdeSubject::GeneratingFunction => target.norm(),
            OdeSubject::Homogeneous => value.norm(),
        };
        worst = worst.max((operator - target).norm() / scale.max(1.0));
    }
    Ok(worst)
}

fn boundary_value(a: ComplexValue, x: f64) -> Result<ComplexValue> {
    if !(x > 0.0 && x <= BOUNDARY_MAX_X) {
        return Err(Error::Domain(format!("x = {x} must lie in (0, {BOUNDARY_MAX_X}]")));
    }
    legendre(a, real(1.0 - x), BOUNDARY_TOL, BOUNDARY_MAX_TERMS)
}

/// |₂F₁(a, 1−a; 1; 1−x) − (sin πa / π) log(1/x)| at x = `x_small`: the O(1)
/// remainder of the logarithmic singularity.
pub fn boundary_asymptotic_check(a: ComplexValue, x_small: f64) -> Result<f64> {
    check_not_integer(a)?;
    let f = boundary_value(a, x_small)?;
    let leading = (a * std::f64::consts::PI).sin() / std::f64::consts::PI * (1.0 / x_small).ln();
    Ok((f - leading).norm())
}

/// Two-point estimate of the coefficient of log(1/x) in ₂F₁(a, 1−a; 1; 1−x).
pub fn boundary_log_slope(a: ComplexValue, x1: f64, x2: f64) -> Result<ComplexValue> {
    check_not_integer(a)?;
    if x1 == x2 {
        return Err(Error::Domain("the two boundary points must differ".into()));
    }
    let (f1, f2) = (boundary_value(a, x1)?, boundary_value(a, x2)?);
    Ok((f1 - f2) / ((1.0 / x1).ln() - (1.0 / x2).ln()))
}

/// A terminating instance of the ln 2 relation.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSumInstance {
    pub verification: VerificationResult,
    /// Nonzero terms of the right-hand series Σ (½)ₙ(1−b)ₙ/(n!(b+½)ₙ) H₂ₙ.
    pub nonzero_terms: usize,
    /// Index of the last nonzero term, b − 1.
    pub last_index: usize,
}

/// Verify THM-E at integer b ∈ {2, 3, 4}, where the right-hand series is a
/// finite sum, and count its nonzero terms.
pub fn finite_sum_instance(b: u32) -> Result<FiniteSumInstance> {
    if !(2..=4).contains(&b) {
        return Err(Error::Domain(format!(
            "finite-sum instances are defined for b in {{2, 3, 4}}, got {b}"
        )));
    }
    let bb = real(f64::from(b));
    let spec = PochhammerRatioSeries::new(vec![real(0.5), 1.0 - bb], vec![bb + 0.5])
        .with_factorial_power(1)
        .starting_at(1);
    let weight = WeightKind::<f64>::harmonic(2);
    let last_index = spec
        .terminating_index()
        .ok_or_else(|| Error::Evaluation("right-hand series does not terminate".into()))?;
    let mut state = weight.state();
    let mut coefficient = real(1.0);
    let mut nonzero_terms = 0;
    // run past the predicted end to confirm every later term vanishes
    for n in 0..last_index + 8 {
        if n >= spec.start_index && (coefficient * state.value()).norm() != 0.0 {
            nonzero_terms += 1;
        }
        coefficient *= spec.term_ratio(n);
        state.advance();
    }
    let point = Point::new().with("b", bb);
    let verification = standard().verify("THM-E", &point, &VerifyOptions::default())?;
    Ok(FiniteSumInstance {
        verification,
        nonzero_terms,
        last_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_checks() {
        assert!(matches!(ode_residual(real(1.0), &[0.5], 1e-3), Err(Error::Domain(_))));
        assert!(matches!(ode_residual(real(0.5), &[0.001], 1e-3), Err(Error::Domain(_))));
        assert!(matches!(ode_residual(real(0.5), &[], 1e-3), Err(Error::Domain(_))));
        assert!(matches!(
            boundary_asymptotic_check(real(0.5), 0.01),
            Err(Error::Domain(_))
        ));
        assert!(matches!(finite_sum_instance(5), Err(Error::Domain(_))));
    }

    #[test]
    fn single_point_residual() {
        let r = ode_residual(real(1.0 / 3.0), &[0.5], 1e-3).unwrap();
        assert!(r <= 1e-4, "{r}");
    }
}
