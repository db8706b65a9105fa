//! The catalog: lookup, two-sided evaluation and verification.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use super::expr::{c, EvalContext, Expr};
use super::identity::{Citation, Identity, Transformation};
use super::point::Point;
use super::registry::identities;
use super::transform::transformations;
use crate::error::{Error, Result};
use crate::series::{Method, SeriesResult, DEFAULT_MAX_TERMS};
use crate::ComplexValue;

/// Series inside a verification are summed to a quarter of the comparison
/// tolerance, but never below this double-precision floor.
pub const SERIES_TOL_FLOOR: f64 = 1e-15;
/// Seed for sampled default points.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub id: String,
    pub point: Point,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_err: f64,
    /// |lhs − rhs| / |rhs|; the pass decision uses `abs_err / max(1, |rhs|)`.
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Terms summed on the left side (both sides for transformation checks).
    pub terms_used: usize,
    pub method: Method,
    pub elapsed: Duration,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Overrides the entry's own tolerance.
    pub tol: Option<f64>,
    pub max_terms: usize,
    pub accel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: None,
            max_terms: DEFAULT_MAX_TERMS,
            accel: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Identity,
    Transformation,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Identity => "identity",
            EntryKind::Transformation => "transformation",
        }
    }
}

/// One row of [`Catalog::list`].
#[derive(Debug, Clone, PartialEq)]
pub struct Listing {
    pub id: &'static str,
    pub kind: EntryKind,
    pub citation: Citation,
    pub parameters: Vec<&'static str>,
    pub default_points: usize,
    pub tol: f64,
    pub accel_required: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum Entry<'a> {
    Identity(&'a Identity),
    Transformation(&'a Transformation),
}

impl Entry<'_> {
    pub fn id(&self) -> &'static str {
        match self {
            Entry::Identity(i) => i.id,
            Entry::Transformation(t) => t.id,
        }
    }

    pub fn parameters(&self) -> &[&'static str] {
        match self {
            Entry::Identity(i) => &i.parameters,
            Entry::Transformation(t) => &t.parameters,
        }
    }

    pub fn tol(&self) -> f64 {
        match self {
            Entry::Identity(i) => i.tol,
            Entry::Transformation(t) => t.tol,
        }
    }

    pub fn check_domain(&self, point: &Point) -> Result<()> {
        match self {
            Entry::Identity(i) => i.check_domain(point),
            Entry::Transformation(t) => t.check_domain(point),
        }
    }

    pub fn default_points(&self, seed: u64) -> Result<Vec<Point>> {
        match self {
            Entry::Identity(i) => i.default_points(seed),
            Entry::Transformation(t) => t.default_points(seed),
        }
    }
}

/// The immutable registry of identities and transformation checks.
#[derive(Debug, Clone)]
pub struct Catalog {
    identities: Vec<Identity>,
    transformations: Vec<Transformation>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

/// The shared standard catalog.
pub fn standard() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::standard)
}

fn series_tol(tol: f64) -> (f64, Option<String>) {
    let quarter = tol / 4.0;
    if quarter < SERIES_TOL_FLOOR {
        let note = format!("tolerance {tol:e} is below double-precision reach; series summed to {SERIES_TOL_FLOOR:e}");
        (SERIES_TOL_FLOOR, Some(note))
    } else {
        (quarter, None)
    }
}

fn validate_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be a positive finite number, got {tol}"
        )))
    }
}

#[allow(clippy::too_many_arguments)]
fn compare(
    id: &str,
    point: &Point,
    lhs: ComplexValue,
    rhs: ComplexValue,
    tol: f64,
    terms_used: usize,
    method: Method,
    started: Instant,
    note: Option<String>,
) -> VerificationResult {
    let abs_err = (lhs - rhs).norm();
    let scale = rhs.norm();
    let rel_err = if scale > 0.0 {
        abs_err / scale
    } else if abs_err == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    VerificationResult {
        id: id.to_owned(),
        point: point.clone(),
        lhs,
        rhs,
        abs_err,
        rel_err,
        tol,
        pass: abs_err / scale.max(1.0) <= tol,
        terms_used,
        method,
        elapsed: started.elapsed(),
        note,
    }
}

impl Catalog {
    pub fn standard() -> Self {
        Self {
            identities: identities(),
            transformations: transformations(),
        }
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }

    pub fn transformations(&self) -> &[Transformation] {
        &self.transformations
    }

    /// Every id, identities first, in registry order.
    pub fn ids(&self) -> Vec<&'static str> {
        self.identities
            .iter()
            .map(|i| i.id)
            .chain(self.transformations.iter().map(|t| t.id))
            .collect()
    }

    pub fn identity(&self, id: &str) -> Result<&Identity> {
        self.identities
            .iter()
            .find(|i| i.id == id)
            .ok_or_else(|| Error::NotFound(format!("no identity '{id}'")))
    }

    pub fn transformation(&self, id: &str) -> Result<&Transformation> {
        self.transformations
            .iter()
            .find(|t| t.id == id)
            .ok_or_else(|| Error::NotFound(format!("no transformation check '{id}'")))
    }

    pub fn entry(&self, id: &str) -> Result<Entry<'_>> {
        if let Ok(identity) = self.identity(id) {
            return Ok(Entry::Identity(identity));
        }
        self.transformation(id)
            .map(Entry::Transformation)
            .map_err(|_| Error::NotFound(format!("no registry entry '{id}'")))
    }

    /// Registry table in registry order; point counts use `seed`.
    pub fn list(&self, seed: u64) -> Vec<Listing> {
        let identities = self.identities.iter().map(|i| Listing {
            id: i.id,
            kind: EntryKind::Identity,
            citation: i.citation,
            parameters: i.parameters.clone(),
            default_points: i.default_points(seed).map_or(0, |p| p.len()),
            tol: i.tol,
            accel_required: i.accel_required,
        });
        let transformations = self.transformations.iter().map(|t| Listing {
            id: t.id,
            kind: EntryKind::Transformation,
            citation: t.citation,
            parameters: t.parameters.clone(),
            default_points: t.default_points(seed).map_or(0, |p| p.len()),
            tol: t.tol,
            accel_required: t.accel_required,
        });
        identities.chain(transformations).collect()
    }

    /// Left side of an identity: `scale · Σ t_n w_n xⁿ`. The returned
    /// result carries the scaled value and the series' own diagnostics.
    pub fn eval_lhs(
        &self,
        id: &str,
        point: &Point,
        tol: f64,
        max_terms: usize,
        accel: bool,
    ) -> Result<SeriesResult<f64>> {
        validate_tol(tol)?;
        let identity = self.identity(id)?;
        identity.check_domain(point)?;
        let ctx = EvalContext::new(point, tol, max_terms, accel);
        Self::lhs_in(identity, &ctx)
    }

    fn lhs_in(identity: &Identity, ctx: &EvalContext<'_>) -> Result<SeriesResult<f64>> {
        let scale = identity.lhs_scale.eval(ctx)?;
        let arg = identity.lhs_arg.eval(ctx)?;
        let mut result = identity.lhs_series.evaluate(ctx, arg)?;
        result.value *= scale;
        result.tail_bound *= scale.norm();
        Ok(result)
    }

    /// Right side of an identity, with series nodes summed to `tol`.
    pub fn eval_rhs(&self, id: &str, point: &Point, tol: f64, max_terms: usize, accel: bool) -> Result<ComplexValue> {
        validate_tol(tol)?;
        let identity = self.identity(id)?;
        identity.check_domain(point)?;
        identity.rhs.eval(&EvalContext::new(point, tol, max_terms, accel))
    }

    /// Evaluate both sides of an identity or transformation check at
    /// `point`. A mismatch yields `pass = false`, not an error.
    pub fn verify(&self, id: &str, point: &Point, options: &VerifyOptions) -> Result<VerificationResult> {
        let started = Instant::now();
        let entry = self.entry(id)?;
        let tol = options.tol.unwrap_or_else(|| entry.tol());
        validate_tol(tol)?;
        entry.check_domain(point)?;
        let (inner_tol, note) = series_tol(tol);
        let ctx = EvalContext::new(point, inner_tol, options.max_terms, options.accel);
        match entry {
            Entry::Identity(identity) => {
                let lhs = Self::lhs_in(identity, &ctx)?;
                let rhs = identity.rhs.eval(&ctx)?;
                Ok(compare(
                    id,
                    point,
                    lhs.value,
                    rhs,
                    tol,
                    lhs.terms_used,
                    lhs.method,
                    started,
                    note,
                ))
            }
            Entry::Transformation(t) => {
                let lhs = t.lhs.eval(&ctx)?;
                let rhs = t.rhs.eval(&ctx)?;
                Ok(compare(
                    id,
                    point,
                    lhs,
                    rhs,
                    tol,
                    ctx.terms_used(),
                    ctx.method(),
                    started,
                    note,
                ))
            }
        }
    }

    /// Relative residual |LHS − RHS| / max(1, |LHS|) of a transformation
    /// check; `z` is required exactly when the check has a `z` parameter.
    pub fn check_transformation(&self, id: &str, params: &Point, z: Option<ComplexValue>, tol: f64) -> Result<f64> {
        validate_tol(tol)?;
        let t = self.transformation(id)?;
        let mut point = params.clone();
        match (t.uses_z(), z) {
            (true, Some(z)) => point.set("z", z),
            (true, None) => return Err(Error::Domain(format!("{id} needs a value of z"))),
            (false, Some(_)) => return Err(Error::Domain(format!("{id} takes no z"))),
            (false, None) => {}
        }
        t.check_domain(&point)?;
        let ctx = EvalContext::new(&point, series_tol(tol).0, DEFAULT_MAX_TERMS, true);
        let lhs = t.lhs.eval(&ctx)?;
        let rhs = t.rhs.eval(&ctx)?;
        Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
    }

    /// Default points of an entry for `seed`.
    pub fn default_points(&self, id: &str, seed: u64) -> Result<Vec<Point>> {
        self.entry(id)?.default_points(seed)
    }

    /// Multiply the right side of `id` by `factor`, for exercising the
    /// failure path of the verification machinery.
    pub fn corrupt_rhs(&mut self, id: &str, factor: f64) -> Result<()> {
        let slot = if let Some(identity) = self.identities.iter_mut().find(|i| i.id == id) {
            &mut identity.rhs
        } else {
            &mut self
                .transformations
                .iter_mut()
                .find(|t| t.id == id)
                .ok_or_else(|| Error::NotFound(format!("no registry entry '{id}'")))?
                .rhs
        };
        let original = std::mem::replace(slot, Expr::Const(ComplexValue::new(0.0, 0.0)));
        *slot = original * c(factor);
        Ok(())
    }
}

/// Registry listing of the standard catalog.
pub fn list_identities() -> Vec<Listing> {
    standard().list(DEFAULT_SEED)
}

/// [`Catalog::eval_lhs`] on the standard catalog with default limits.
pub fn eval_lhs(id: &str, point: &Point, tol: f64) -> Result<SeriesResult<f64>> {
    standard().eval_lhs(id, point, tol, DEFAULT_MAX_TERMS, true)
}

/// [`Catalog::eval_rhs`] on the standard catalog with default limits.
pub fn eval_rhs(id: &str, point: &Point) -> Result<ComplexValue> {
    let identity = standard().identity(id)?;
    standard().eval_rhs(id, point, series_tol(identity.tol).0, DEFAULT_MAX_TERMS, true)
}

/// [`Catalog::verify`] on the standard catalog.
pub fn verify(id: &str, point: &Point, tol: Option<f64>, accel: bool) -> Result<VerificationResult> {
    standard().verify(
        id,
        point,
        &VerifyOptions {
            tol,
            accel,
            ..VerifyOptions::default()
        },
    )
}

/// [`Catalog::check_transformation`] on the standard catalog.
pub fn check_transformation(id: &str, params: &Point, z: Option<ComplexValue>, tol: f64) -> Result<f64> {
    standard().check_transformation(id, params, z, tol)
}
