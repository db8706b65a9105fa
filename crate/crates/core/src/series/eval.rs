//! Series evaluation driver.
//!
//! Three regimes, decided from the coefficient degree balance and ratio limit λ:
//!
//! * |λ| < 1: direct summation with the term-ratio stopping rule.
//! * λ = 1: partial sums at N = 2^k, limit from the known-exponent
//!   Richardson fit (needs `accel`).
//! * |λ| = 1, λ ≠ 1: Wynn ε on consecutive partial sums (needs `accel`).
//!
//! Terminating series (a numerator shift at a non-positive integer, or
//! x = 0) are summed exactly.

use num_complex::Complex;
use num_traits::Zero;

use super::accel::{richardson_known_basis, richardson_unknowns, wynn_epsilon};
use super::spec::PochhammerRatioSeries;
use super::weight::{WeightKind, WeightState};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default relative tolerance for series with |x| ≤ 0.96.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default relative tolerance for accelerated unit-argument series.
pub const UNIT_ARGUMENT_TOL: f64 = 1e-6;
/// Default cap on the number of summed terms.
pub const DEFAULT_MAX_TERMS: usize = 200_000;

const UNIT_CIRCLE_TOL: f64 = 1e-12;
const STABLE_STEPS: usize = 3;
const WYNN_WINDOW: usize = 21;
// samples at N = 1, 2, 4 are too far from the asymptotic regime
const SKIPPED_SAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    WynnEpsilon,
    Richardson,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::WynnEpsilon => "wynn_epsilon",
            Method::Richardson => "richardson",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult<T> {
    pub value: Complex<T>,
    pub terms_used: usize,
    pub tail_bound: T,
    pub converged: bool,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Accel {
    Off,
    UnitCircleOnly,
    Full,
}

/// Σ_{n≥n₀} t_n x^n. Acceleration is switched on automatically when the
/// ratio limit lies on the unit circle.
pub fn eval_hyper<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
) -> Result<SeriesResult<T>> {
    evaluate(spec, &WeightKind::Unit, x, tol, max_terms, Accel::UnitCircleOnly)
}

/// Σ_{n≥n₀} t_n w_n x^n with the weight maintained incrementally.
///
/// Unit-argument series are only summed when `accel` is set; otherwise they
/// fail with [`Error::NonConvergent`]. With `accel` on a |λ| < 1 series,
/// a Wynn ε estimate is returned if it stabilises before the direct rule.
pub fn eval_weighted<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
    accel: bool,
) -> Result<SeriesResult<T>> {
    let mode = if accel { Accel::Full } else { Accel::Off };
    evaluate(spec, weight, x, tol, max_terms, mode)
}

struct Terms<'a, T> {
    spec: &'a PochhammerRatioSeries<T>,
    x: Complex<T>,
    t: Complex<T>,
    weight: WeightState<T>,
    n: usize,
    log: Option<LogCoefficient<T>>,
}

impl<'a, T: Real> Terms<'a, T> {
    fn new(spec: &'a PochhammerRatioSeries<T>, weight: &WeightKind<T>, x: Complex<T>) -> Self {
        Self {
            spec,
            x,
            t: Complex::new(T::one(), T::zero()),
            weight: weight.state(),
            n: 0,
            log: None,
        }
    }

    /// Same terms, but the coefficient is carried as a compensated sum of
    /// logarithms. Multiplying rounded ratios drifts by about one ulp per
    /// term, which matters once a slowly converging series runs to millions
    /// of terms; the logarithmic form stays accurate to a few ulps.
    fn precise(spec: &'a PochhammerRatioSeries<T>, weight: &WeightKind<T>, x: Complex<T>) -> Self {
        let balanced = spec.numerator_shifts.len() == spec.denominator_shifts.len() + spec.factorial_power as usize;
        let mut terms = Self::new(spec, weight, x);
        if balanced {
            terms.log = Some(LogCoefficient::new(spec.geometric_ratio * x));
        }
        terms
    }

    /// Current index and t_n w_n x^n, then step to n + 1.
    fn next_term(&mut self) -> (usize, Complex<T>) {
        let n = self.n;
        let coefficient = match &self.log {
            Some(log) => log.value(),
            None => self.t,
        };
        let value = if n >= self.spec.start_index {
            coefficient * self.weight.value()
        } else {
            Complex::zero()
        };
        match &mut self.log {
            Some(log) => log.step(self.spec, n),
            None => self.t = self.t * self.spec.term_ratio(n) * self.x,
        }
        self.weight.advance();
        self.n += 1;
        (n, value)
    }
}

/// ln t_n as a Neumaier-compensated running sum. Each step adds
/// ln((a + n)/(b + n)) = ln(1 + (a - b)/(b + n)) for paired numerator and
/// denominator shifts, which `ln_1p` evaluates without cancellation.
struct LogCoefficient<T> {
    log: CompensatedSum<T>,
    log_ratio: Complex<T>,
    vanished: bool,
}

impl<T: Real> LogCoefficient<T> {
    fn new(ratio: Complex<T>) -> Self {
        Self {
            log: CompensatedSum::default(),
            log_ratio: ratio.ln(),
            vanished: ratio.is_zero(),
        }
    }

    fn value(&self) -> Complex<T> {
        if self.vanished {
            return Complex::zero();
        }
        self.log.value().exp()
    }

    fn step(&mut self, spec: &PochhammerRatioSeries<T>, n: usize) {
        let nn = T::from_usize_lossy(n);
        let one = Complex::new(T::one(), T::zero());
        let denominators = spec
            .denominator_shifts
            .iter()
            .copied()
            .chain(std::iter::repeat_n(one, spec.factorial_power as usize));
        let mut increment = self.log_ratio;
        for (a, b) in spec.numerator_shifts.iter().zip(denominators) {
            if (*a + nn).is_zero() {
                self.vanished = true;
            }
            increment = increment + ln_1p((*a - b) / (b + nn));
        }
        self.log.add(increment);
    }
}

fn neumaier<T: Real>(sum: T, x: T) -> (T, T) {
    let t = sum + x;
    let lost = if sum.abs() >= x.abs() {
        (sum - t) + x
    } else {
        (x - t) + sum
    };
    (t, lost)
}

#[derive(Default)]
struct CompensatedSum<T> {
    sum: Complex<T>,
    carry: Complex<T>,
}

impl<T: Real> CompensatedSum<T> {
    fn add(&mut self, x: Complex<T>) {
        let (re, c_re) = neumaier(self.sum.re, x.re);
        let (im, c_im) = neumaier(self.sum.im, x.im);
        self.sum = Complex::new(re, im);
        self.carry = self.carry + Complex::new(c_re, c_im);
    }

    fn value(&self) -> Complex<T> {
        self.sum + self.carry
    }
}

/// ln(1 + w) on the principal branch, accurate for small |w|.
fn ln_1p<T: Real>(w: Complex<T>) -> Complex<T> {
    let two = T::lit(2.0);
    let re = (two * w.re + w.norm_sqr()).ln_1p() / two;
    let im = w.im.atan2(T::one() + w.re);
    Complex::new(re, im)
}

fn tiny<T: Real>() -> T {
    T::lit(1e-300).max(T::min_positive_value())
}

fn threshold<T: Real>(tol: T, value: Complex<T>) -> T {
    tol * value.norm().max(tiny())
}

fn not_converged<T: Real>(terms: usize, tail: T) -> Error {
    Error::NonConvergent {
        terms,
        tail_bound: tail.to_f64().unwrap_or(f64::INFINITY),
    }
}

fn evaluate<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
    accel: Accel,
) -> Result<SeriesResult<T>> {
    spec.validate()?;
    weight.validate(spec.start_index)?;
    if tol.is_nan() || tol <= T::zero() {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if max_terms == 0 {
        return Err(Error::Domain("max_terms must be positive".into()));
    }

    let last = if x.is_zero() { Some(0) } else { spec.terminating_index() };
    if let Some(last) = last {
        return finite_sum(spec, weight, x, last, max_terms);
    }

    let limit = spec.ratio_limit(x).ok_or_else(|| not_converged(0, T::infinity()))?;
    let modulus = limit.norm();
    let unit_tol = T::lit(UNIT_CIRCLE_TOL);
    if modulus > T::one() + unit_tol {
        return Err(not_converged(0, T::infinity()));
    }
    if (modulus - T::one()).abs() <= unit_tol {
        let positive = (limit - T::one()).norm() <= unit_tol;
        let sigma = spec.algebraic_exponent();
        let bound = if positive { -T::one() } else { T::zero() };
        if sigma.re >= bound || accel == Accel::Off {
            return Err(not_converged(0, T::infinity()));
        }
        return if positive {
            unit_richardson(spec, weight, x, tol, max_terms, sigma)
        } else {
            unit_wynn(spec, weight, x, tol, max_terms)
        };
    }
    direct(spec, weight, x, tol, max_terms, modulus, accel == Accel::Full)
}

fn finite_sum<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    last: usize,
    max_terms: usize,
) -> Result<SeriesResult<T>> {
    let first = spec.start_index;
    let count = (last + 1).saturating_sub(first);
    if count > max_terms {
        return Err(not_converged(max_terms, T::infinity()));
    }
    let mut terms = Terms::new(spec, weight, x);
    let mut sum = Complex::zero();
    for _ in 0..=last {
        let (_, term) = terms.next_term();
        sum = sum + term;
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: count,
        tail_bound: T::zero(),
        converged: true,
        method: super::Method::Direct,
    })
}

fn direct<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
    ratio_limit: T,
    try_wynn: bool,
) -> Result<SeriesResult<T>> {
    let mut terms = Terms::new(spec, weight, x);
    let mut sum = Complex::zero();
    let mut used = 0usize;
    let mut small_run = 0usize;
    let mut previous_magnitude: Option<T> = None;
    let mut tail = T::infinity();

    let mut partials: Vec<Complex<T>> = Vec::new();
    let mut wynn_previous: Option<Complex<T>> = None;
    let mut wynn_run = 0usize;
    let mut wynn_tail = T::zero();

    while used < max_terms {
        let (n, term) = terms.next_term();
        if n < spec.start_index {
            continue;
        }
        used += 1;
        sum = sum + term;

        if try_wynn {
            partials.push(sum);
            if partials.len() >= WYNN_WINDOW {
                match wynn_epsilon(&partials[partials.len() - WYNN_WINDOW..]) {
                    Ok(estimate) => {
                        if let Some(prev) = wynn_previous {
                            let diff = (estimate - prev).norm();
                            if diff <= threshold(tol, estimate) {
                                wynn_run += 1;
                                wynn_tail = wynn_tail.max(diff);
                            } else {
                                wynn_run = 0;
                                wynn_tail = T::zero();
                            }
                        }
                        wynn_previous = Some(estimate);
                        if wynn_run >= STABLE_STEPS {
                            return Ok(SeriesResult {
                                value: estimate,
                                terms_used: used,
                                tail_bound: wynn_tail,
                                converged: true,
                                method: Method::WynnEpsilon,
                            });
                        }
                    }
                    Err(_) => {
                        wynn_previous = None;
                        wynn_run = 0;
                    }
                }
            }
        }

        let magnitude = term.norm();
        let empirical = match previous_magnitude {
            Some(p) if p > T::zero() => magnitude / p,
            _ => T::one(),
        };
        previous_magnitude = Some(magnitude);
        let ratio = empirical.max(ratio_limit);
        if ratio < T::one() {
            tail = magnitude * ratio / (T::one() - ratio);
            let limit = threshold(tol, sum);
            if magnitude <= limit && tail <= limit {
                small_run += 1;
            } else {
                small_run = 0;
            }
            if small_run >= STABLE_STEPS {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: used,
                    tail_bound: tail,
                    converged: true,
                    method: Method::Direct,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(not_converged(used, tail))
}

fn unit_wynn<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
) -> Result<SeriesResult<T>> {
    let mut terms = Terms::precise(spec, weight, x);
    let mut sum = Complex::zero();
    let mut partials: Vec<Complex<T>> = Vec::new();
    let mut previous: Option<Complex<T>> = None;
    let mut run = 0usize;
    let mut tail = T::zero();
    let mut last_diff = T::infinity();

    while partials.len() < max_terms {
        let (n, term) = terms.next_term();
        if n < spec.start_index {
            continue;
        }
        sum = sum + term;
        partials.push(sum);
        if partials.len() < WYNN_WINDOW {
            continue;
        }
        let estimate = match wynn_epsilon(&partials[partials.len() - WYNN_WINDOW..]) {
            Ok(v) => v,
            Err(_) => {
                previous = None;
                run = 0;
                continue;
            }
        };
        if let Some(prev) = previous {
            last_diff = (estimate - prev).norm();
            if last_diff <= threshold(tol, estimate) {
                run += 1;
                tail = tail.max(last_diff);
            } else {
                run = 0;
                tail = T::zero();
            }
        }
        previous = Some(estimate);
        if run >= STABLE_STEPS {
            return Ok(SeriesResult {
                value: estimate,
                terms_used: partials.len(),
                tail_bound: tail,
                converged: true,
                method: Method::WynnEpsilon,
            });
        }
    }
    Err(not_converged(partials.len(), last_diff))
}

fn unit_richardson<T: Real>(
    spec: &PochhammerRatioSeries<T>,
    weight: &WeightKind<T>,
    x: Complex<T>,
    tol: T,
    max_terms: usize,
    sigma: Complex<T>,
) -> Result<SeriesResult<T>> {
    let unknowns = richardson_unknowns(weight.log_degree());
    let mut terms = Terms::precise(spec, weight, x);
    let mut sum = CompensatedSum::default();
    let mut sizes: Vec<usize> = Vec::new();
    let mut samples: Vec<Complex<T>> = Vec::new();
    let mut next_sample = 1usize;
    let mut previous_fit: Option<Complex<T>> = None;
    let mut last_diff = T::infinity();
    let mut used = 0usize;

    while used < max_terms {
        let (n, term) = terms.next_term();
        if n >= spec.start_index {
            used += 1;
            sum.add(term);
        }
        if n != next_sample {
            continue;
        }
        next_sample *= 2;
        sizes.push(n);
        samples.push(sum.value());
        if samples.len() < SKIPPED_SAMPLES + unknowns {
            continue;
        }
        let from = samples.len() - unknowns;
        let fit = richardson_known_basis(&samples[from..], &sizes[from..], sigma, weight.log_degree())?;
        if let Some(prev) = previous_fit {
            last_diff = (fit - prev).norm();
            if last_diff <= threshold(tol, fit) {
                return Ok(SeriesResult {
                    value: fit,
                    terms_used: used,
                    tail_bound: last_diff,
                    converged: true,
                    method: Method::Richardson,
                });
            }
        }
        previous_fit = Some(fit);
    }
    Err(not_converged(used, last_diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::gamma_ratio;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    fn gauss(a: f64, b: f64, cc: f64) -> PochhammerRatioSeries<f64> {
        PochhammerRatioSeries::hypergeometric(vec![c(a), c(b)], vec![c(cc)])
    }

    #[test]
    fn zero_argument_is_one() {
        let r = eval_hyper(&gauss(0.3, 0.7, 1.4), c(0.0), 1e-12, 100).unwrap();
        assert_eq!(r.value, c(1.0));
        assert_eq!(r.terms_used, 1);
        assert!(r.converged);
    }

    #[test]
    fn logarithm_series() {
        let r = eval_hyper(&gauss(1.0, 1.0, 2.0), c(0.5), 1e-13, 1000).unwrap();
        assert!((r.value.re - 2.0 * 2f64.ln()).abs() < 1e-12);
        assert_eq!(r.method, Method::Direct);
        assert!(r.tail_bound <= 1e-13 * r.value.norm().max(1.0));
    }

    #[test]
    fn gauss_sum_at_unit_argument() {
        let r = eval_hyper(&gauss(0.25, 0.25, 1.5), c(1.0), 1e-10, DEFAULT_MAX_TERMS).unwrap();
        let exact = gamma_ratio(&[c(1.5), c(1.0)], &[c(1.25), c(1.25)]).unwrap();
        assert!((r.value - exact).norm() < 1e-9, "{} vs {}", r.value, exact);
        assert_eq!(r.method, Method::Richardson);
        assert!((exact.re - 1.078_705_202_376_758_7).abs() < 1e-13);
    }

    #[test]
    fn long_unit_argument_runs_do_not_drift() {
        // σ = -1/2 needs ~10⁵ terms at this tolerance; a plain running product
        // of rounded ratios would lose several digits on the way
        let r = eval_hyper(&gauss(1.0 / 3.0, 1.0 / 3.0, 1.5), c(1.0), 1e-13, DEFAULT_MAX_TERMS).unwrap();
        let exact = gamma_ratio(&[c(1.5), c(5.0 / 6.0)], &[c(7.0 / 6.0), c(7.0 / 6.0)]).unwrap();
        assert!(
            (r.value - exact).norm() < 1e-12 * exact.norm(),
            "{} vs {}",
            r.value,
            exact
        );
    }

    #[test]
    fn unit_argument_without_acceleration_fails_loudly() {
        let spec = gauss(0.25, 0.25, 1.5);
        let err = eval_weighted(&spec, &WeightKind::Unit, c(1.0), 1e-8, 10_000, false).unwrap_err();
        assert!(matches!(err, Error::NonConvergent { .. }));
    }

    #[test]
    fn divergent_inputs_are_rejected() {
        let spec = gauss(0.5, 0.5, 1.0);
        assert!(matches!(
            eval_hyper(&spec, c(1.5), 1e-8, 1000),
            Err(Error::NonConvergent { .. })
        ));
        // σ = a + b − c − 1 = −0.5 is not enough at x = 1
        assert!(matches!(
            eval_hyper(&spec, c(1.0), 1e-8, 1000),
            Err(Error::NonConvergent { .. })
        ));
        let three_over_one = PochhammerRatioSeries::hypergeometric(vec![c(0.5), c(0.5), c(0.5)], vec![]);
        assert!(matches!(
            eval_hyper(&three_over_one, c(0.1), 1e-8, 1000),
            Err(Error::NonConvergent { .. })
        ));
    }

    #[test]
    fn invalid_tolerance_is_a_domain_error() {
        assert!(matches!(
            eval_hyper(&gauss(0.5, 0.5, 1.0), c(0.1), 0.0, 10),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn term_cap_reports_non_convergence() {
        let err = eval_hyper(&gauss(1.0, 1.0, 2.0), c(0.9), 1e-14, 20).unwrap_err();
        match err {
            Error::NonConvergent { terms, tail_bound } => {
                assert_eq!(terms, 20);
                assert!(tail_bound > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn terminating_series_is_exact() {
        // ₂F₁(−3, 2; 1; x) = 1 − 6x + 9x² − 4x³
        let x = 0.7;
        let r = eval_hyper(&gauss(-3.0, 2.0, 1.0), c(x), 1e-15, 10).unwrap();
        let expected = 1.0 - 6.0 * x + 9.0 * x * x - 4.0 * x * x * x;
        assert!((r.value.re - expected).abs() < 1e-14);
        assert_eq!(r.terms_used, 4);
        assert_eq!(r.tail_bound, 0.0);
    }

    #[test]
    fn central_binomial_harmonic_series_is_fast() {
        let spec = PochhammerRatioSeries::new(vec![c(0.5), c(0.5)], vec![])
            .with_factorial_power(2)
            .with_ratio(c(0.5))
            .starting_at(1);
        let r = eval_weighted(&spec, &WeightKind::harmonic(1), c(1.0), 1e-12, 300, false).unwrap();
        assert!((r.value.re - 0.217_775_160_684_483_8).abs() < 1e-12);
        assert!(r.terms_used <= 300);
    }

    #[test]
    fn alternating_unit_series_uses_wynn() {
        // Σ (−1)^n / (n + 1) = ln 2
        let spec = PochhammerRatioSeries::new(vec![c(1.0)], vec![c(2.0)]).with_ratio(c(-1.0));
        let r = eval_hyper(&spec, c(1.0), 1e-12, 10_000).unwrap();
        assert_eq!(r.method, Method::WynnEpsilon);
        assert!((r.value.re - 2f64.ln()).abs() < 1e-11);
        assert!(r.terms_used < 100);
    }

    #[test]
    fn weighted_unit_matches_hyper() {
        let spec = gauss(0.25, 0.25, 1.5);
        let a = eval_hyper(&spec, c(0.3), 1e-14, 1000).unwrap();
        let b = eval_weighted(&spec, &WeightKind::Unit, c(0.3), 1e-14, 1000, false).unwrap();
        assert!((a.value - b.value).norm() <= 1e-14);
        assert!((a.value.re - 1.013_878_707_619_753_3).abs() < 1e-13);
    }

    #[test]
    fn early_wynn_on_geometric_tail() {
        let spec = gauss(1.0, 1.0, 2.0);
        let r = eval_weighted(&spec, &WeightKind::Unit, c(-0.9), 1e-12, 100_000, true).unwrap();
        let exact = (1.9f64).ln() / 0.9;
        assert!((r.value.re - exact).abs() < 1e-11);
    }

    #[test]
    fn works_in_single_precision() {
        let spec = PochhammerRatioSeries::<f32>::hypergeometric(
            vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)],
            vec![Complex::new(2.0, 0.0)],
        );
        let r = eval_hyper(&spec, Complex::new(0.5f32, 0.0), 1e-6, 1000).unwrap();
        assert!((r.value.re - 2.0 * 2f32.ln()).abs() < 1e-5);
    }
}
