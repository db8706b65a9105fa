//! Closed-form expression trees over the identity parameters.

use std::cell::Cell;
use std::ops;

use super::point::Point;
use crate::error::{Error, Result};
use crate::series::{eval_hyper, eval_weighted, Method, PochhammerRatioSeries, SeriesResult, WeightKind};
use crate::specialfn::{digamma, elliptic_k, gamma, ln_gamma};
use crate::ComplexValue;

/// Largest imaginary part tolerated where a real argument is required.
const REAL_TOLERANCE: f64 = 1e-14;
const UNIT_CIRCLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(ComplexValue),
    Param(&'static str),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// Principal branch `base^exponent`.
    Pow(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Log(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Gamma(Box<Expr>),
    LnGamma(Box<Expr>),
    Digamma(Box<Expr>),
    /// K(k) in the modulus convention; the argument must be real.
    EllipticK(Box<Expr>),
    Hyp2F1 {
        a: Box<Expr>,
        b: Box<Expr>,
        c: Box<Expr>,
        arg: Box<Expr>,
    },
    /// A weighted series Σ t_n w_n x^n, summed by the series engine.
    Series {
        template: Box<SeriesTemplate>,
        arg: Box<Expr>,
    },
}

/// Declarative series whose shifts, ratio and weight parameters are
/// expressions in the identity parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTemplate {
    pub numerators: Vec<Expr>,
    pub denominators: Vec<Expr>,
    pub factorial_power: u32,
    pub ratio: Expr,
    pub start: usize,
    pub weight: WeightTemplate,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightTemplate {
    Unit,
    Harmonic { stride: usize, offset: i64 },
    HarmonicSqPlusGen2,
    ReciprocalShift,
    DigammaDiffSum { a: Expr, b: Expr },
    Alternating(Box<WeightTemplate>),
    LinearCombo(Vec<(Expr, WeightTemplate)>),
}

/// Factor applied to the tolerance of geometrically convergent series.
pub const GEOMETRIC_TOL_MARGIN: f64 = 1e-3;
/// Smallest summation tolerance requested from the series engine.
pub const MIN_SERIES_TOL: f64 = 1e-15;

/// Evaluation settings shared by every node of one expression.
#[derive(Debug)]
pub struct EvalContext<'a> {
    pub point: &'a Point,
    pub tol: f64,
    pub max_terms: usize,
    pub accel: bool,
    terms: Cell<usize>,
    method: Cell<Method>,
}

impl<'a> EvalContext<'a> {
    pub fn new(point: &'a Point, tol: f64, max_terms: usize, accel: bool) -> Self {
        Self {
            point,
            tol,
            max_terms,
            accel,
            terms: Cell::new(0),
            method: Cell::new(Method::Direct),
        }
    }

    /// Total series terms summed by nodes evaluated in this context.
    pub fn terms_used(&self) -> usize {
        self.terms.get()
    }

    /// The acceleration method of the last accelerated series node, or
    /// `Direct` when every node converged directly.
    pub fn method(&self) -> Method {
        self.method.get()
    }

    /// Summation tolerance for a series whose term ratio tends to `limit`.
    /// Geometrically convergent series are cheap to over-resolve, and the
    /// closed forms that contain them often cancel (THM-B style
    /// `F(1-x) - log(..) F(x)` at small x), so they get a margin of
    /// [`GEOMETRIC_TOL_MARGIN`]; series on the unit circle get `tol` itself.
    pub fn series_tol(&self, limit: Option<ComplexValue>) -> f64 {
        match limit {
            Some(l) if l.norm() < 1.0 - UNIT_CIRCLE_TOL => {
                (self.tol * GEOMETRIC_TOL_MARGIN).max(MIN_SERIES_TOL).min(self.tol)
            }
            _ => self.tol,
        }
    }

    fn record(&self, result: &SeriesResult<f64>) {
        self.terms.set(self.terms.get() + result.terms_used);
        if result.method != Method::Direct {
            self.method.set(result.method);
        }
    }
}

pub fn c(re: f64) -> Expr {
    Expr::Const(ComplexValue::new(re, 0.0))
}

pub fn p(name: &'static str) -> Expr {
    Expr::Param(name)
}

pub fn pi() -> Expr {
    c(std::f64::consts::PI)
}

macro_rules! unary {
    ($($fn_name:ident => $variant:ident),* $(,)?) => {
        $(pub fn $fn_name(e: Expr) -> Expr {
            Expr::$variant(Box::new(e))
        })*
    };
}

unary! {
    sqrt => Sqrt,
    log => Log,
    sin => Sin,
    cos => Cos,
    gamma_of => Gamma,
    ln_gamma_of => LnGamma,
    psi => Digamma,
    elliptic_k_of => EllipticK,
}

pub fn pow(base: Expr, exponent: Expr) -> Expr {
    Expr::Pow(Box::new(base), Box::new(exponent))
}

pub fn hyp2f1(a: Expr, b: Expr, cc: Expr, arg: Expr) -> Expr {
    Expr::Hyp2F1 {
        a: Box::new(a),
        b: Box::new(b),
        c: Box::new(cc),
        arg: Box::new(arg),
    }
}

pub fn series(template: SeriesTemplate, arg: Expr) -> Expr {
    Expr::Series {
        template: Box::new(template),
        arg: Box::new(arg),
    }
}

/// Γ(n₁)…Γ(n_k) / (Γ(d₁)…Γ(d_m)).
pub fn gamma_product(numerators: Vec<Expr>, denominators: Vec<Expr>) -> Expr {
    let num = numerators
        .into_iter()
        .map(gamma_of)
        .reduce(|x, y| x * y)
        .unwrap_or_else(|| c(1.0));
    denominators.into_iter().map(gamma_of).fold(num, |acc, d| acc / d)
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
        impl ops::$trait<f64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: f64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(c(rhs)))
            }
        }
        impl ops::$trait<Expr> for f64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(c(self)), Box::new(rhs))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

fn finite(value: ComplexValue, what: &str) -> Result<ComplexValue> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Evaluation(format!("{what} produced a non-finite value")))
    }
}

fn real_part(value: ComplexValue, what: &str) -> Result<f64> {
    if value.im.abs() <= REAL_TOLERANCE * value.re.abs().max(1.0) {
        Ok(value.re)
    } else {
        Err(Error::Domain(format!("{what} requires a real argument, got {value}")))
    }
}

impl Expr {
    /// Evaluate at `ctx.point`; every successful result is finite.
    pub fn eval(&self, ctx: &EvalContext<'_>) -> Result<ComplexValue> {
        let value = match self {
            Expr::Const(v) => *v,
            Expr::Param(name) => ctx
                .point
                .get(name)
                .ok_or_else(|| Error::Domain(format!("missing parameter '{name}'")))?,
            Expr::Add(x, y) => x.eval(ctx)? + y.eval(ctx)?,
            Expr::Sub(x, y) => x.eval(ctx)? - y.eval(ctx)?,
            Expr::Mul(x, y) => x.eval(ctx)? * y.eval(ctx)?,
            Expr::Div(x, y) => {
                let den = y.eval(ctx)?;
                if den.norm() == 0.0 {
                    return Err(Error::Pole("division by zero".into()));
                }
                x.eval(ctx)? / den
            }
            Expr::Neg(x) => -x.eval(ctx)?,
            Expr::Pow(x, y) => {
                let base = x.eval(ctx)?;
                let exponent = y.eval(ctx)?;
                if base.norm() == 0.0 {
                    if exponent.re > 0.0 {
                        ComplexValue::new(0.0, 0.0)
                    } else {
                        return Err(Error::Pole("zero raised to a non-positive power".into()));
                    }
                } else {
                    base.powc(exponent)
                }
            }
            Expr::Sqrt(x) => x.eval(ctx)?.sqrt(),
            Expr::Log(x) => {
                let v = x.eval(ctx)?;
                if v.norm() == 0.0 {
                    return Err(Error::Pole("logarithm of zero".into()));
                }
                v.ln()
            }
            Expr::Sin(x) => x.eval(ctx)?.sin(),
            Expr::Cos(x) => x.eval(ctx)?.cos(),
            Expr::Gamma(x) => gamma(x.eval(ctx)?)?,
            Expr::LnGamma(x) => ln_gamma(x.eval(ctx)?)?,
            Expr::Digamma(x) => digamma(x.eval(ctx)?)?,
            Expr::EllipticK(x) => {
                let k = real_part(x.eval(ctx)?, "elliptic K")?;
                ComplexValue::new(elliptic_k(k)?, 0.0)
            }
            Expr::Hyp2F1 { a, b, c, arg } => {
                let spec = PochhammerRatioSeries::hypergeometric(vec![a.eval(ctx)?, b.eval(ctx)?], vec![c.eval(ctx)?]);
                let x = arg.eval(ctx)?;
                let result = eval_hyper(&spec, x, ctx.series_tol(spec.ratio_limit(x)), ctx.max_terms)?;
                ctx.record(&result);
                result.value
            }
            Expr::Series { template, arg } => {
                let result = template.evaluate(ctx, arg.eval(ctx)?)?;
                ctx.record(&result);
                result.value
            }
        };
        finite(value, "expression")
    }
}

impl SeriesTemplate {
    /// ₚF_q-shaped template: `(a₁)_n…/((b₁)_n… n!) · rⁿ`, from n = 0, unit weight.
    pub fn hypergeometric(numerators: Vec<Expr>, denominators: Vec<Expr>) -> Self {
        Self {
            numerators,
            denominators,
            factorial_power: 1,
            ratio: c(1.0),
            start: 0,
            weight: WeightTemplate::Unit,
        }
    }

    pub fn factorial_power(mut self, power: u32) -> Self {
        self.factorial_power = power;
        self
    }

    pub fn ratio(mut self, ratio: Expr) -> Self {
        self.ratio = ratio;
        self
    }

    pub fn weighted(mut self, weight: WeightTemplate) -> Self {
        self.weight = weight;
        // every weight besides the unit one vanishes or is undefined at n = 0
        self.start = if weight_is_unit(&self.weight) { 0 } else { 1 };
        self
    }

    pub fn instantiate(&self, ctx: &EvalContext<'_>) -> Result<(PochhammerRatioSeries<f64>, WeightKind<f64>)> {
        let numerators = self
            .numerators
            .iter()
            .map(|e| e.eval(ctx))
            .collect::<Result<Vec<_>>>()?;
        let denominators = self
            .denominators
            .iter()
            .map(|e| e.eval(ctx))
            .collect::<Result<Vec<_>>>()?;
        let spec = PochhammerRatioSeries::new(numerators, denominators)
            .with_factorial_power(self.factorial_power)
            .with_ratio(self.ratio.eval(ctx)?)
            .starting_at(self.start);
        Ok((spec, self.weight.instantiate(ctx)?))
    }

    /// Sum at argument `x`; acceleration is only engaged on the unit circle.
    pub fn evaluate(&self, ctx: &EvalContext<'_>, x: ComplexValue) -> Result<SeriesResult<f64>> {
        let (spec, weight) = self.instantiate(ctx)?;
        let limit = spec.ratio_limit(x);
        let on_unit_circle = limit.is_some_and(|l| (l.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL);
        eval_weighted(
            &spec,
            &weight,
            x,
            ctx.series_tol(limit),
            ctx.max_terms,
            ctx.accel && on_unit_circle,
        )
    }
}

fn weight_is_unit(w: &WeightTemplate) -> bool {
    matches!(w, WeightTemplate::Unit)
}

impl WeightTemplate {
    pub fn harmonic(stride: usize) -> Self {
        WeightTemplate::Harmonic { stride, offset: 0 }
    }

    pub fn instantiate(&self, ctx: &EvalContext<'_>) -> Result<WeightKind<f64>> {
        Ok(match self {
            WeightTemplate::Unit => WeightKind::Unit,
            WeightTemplate::Harmonic { stride, offset } => WeightKind::Harmonic {
                stride: *stride,
                offset: *offset,
            },
            WeightTemplate::HarmonicSqPlusGen2 => WeightKind::HarmonicSqPlusGen2,
            WeightTemplate::ReciprocalShift => WeightKind::ReciprocalShift,
            WeightTemplate::DigammaDiffSum { a, b } => WeightKind::DigammaDiffSum {
                a: a.eval(ctx)?,
                b: b.eval(ctx)?,
            },
            WeightTemplate::Alternating(inner) => WeightKind::Alternating(Box::new(inner.instantiate(ctx)?)),
            WeightTemplate::LinearCombo(terms) => WeightKind::LinearCombo(
                terms
                    .iter()
                    .map(|(coef, w)| Ok((coef.eval(ctx)?, w.instantiate(ctx)?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
        })
    }
}
