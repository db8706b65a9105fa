//! Registry records: identities, transformation checks and their sample points.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expr::{Expr, SeriesTemplate};
use super::point::Point;
use crate::error::{Error, Result};
use crate::ComplexValue;

/// Real sample values shared by every pool-sampled parameter.
pub const REAL_POOL: [f64; 5] = [0.1, 0.2, 0.25, 1.0 / 3.0, 0.45];
/// Complex sample values shared by every pool-sampled parameter.
pub const COMPLEX_POOL: [(f64, f64); 2] = [(0.3, 0.1), (0.2, -0.2)];

/// Where a result comes from: an anchor plus a short verbatim quote.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Citation {
    pub anchor: &'static str,
    pub quote: &'static str,
}

/// Parameter-domain predicate; receives a point with exactly the declared names.
pub type DomainPredicate = fn(&Point) -> Result<()>;

#[derive(Debug, Clone, PartialEq)]
pub enum PointPlan {
    Fixed(Vec<Point>),
    /// Seeded draw from the pool combinations accepted by the domain:
    /// `real` all-real points and `complex` points with a complex entry.
    Sampled {
        real: usize,
        complex: usize,
    },
    /// Each base point paired with `per_point` seeded legal values of `z`.
    WithZ {
        base: Vec<Point>,
        per_point: usize,
    },
}

/// `scale · Σ t_n w_n xⁿ = rhs`.
#[derive(Debug, Clone)]
pub struct Identity {
    pub id: &'static str,
    pub citation: Citation,
    pub parameters: Vec<&'static str>,
    pub domain: DomainPredicate,
    pub lhs_scale: Expr,
    pub lhs_series: SeriesTemplate,
    pub lhs_arg: Expr,
    pub rhs: Expr,
    pub points: PointPlan,
    pub accel_required: bool,
    pub tol: f64,
}

/// Two closed forms (typically each containing hypergeometric nodes)
/// that must agree on the legal domain.
#[derive(Debug, Clone)]
pub struct Transformation {
    pub id: &'static str,
    pub citation: Citation,
    pub parameters: Vec<&'static str>,
    pub domain: DomainPredicate,
    pub lhs: Expr,
    pub rhs: Expr,
    pub points: PointPlan,
    pub accel_required: bool,
    pub tol: f64,
}

impl Identity {
    pub fn check_domain(&self, point: &Point) -> Result<()> {
        check_names(self.id, &self.parameters, point)?;
        (self.domain)(point)
    }

    pub fn default_points(&self, seed: u64) -> Result<Vec<Point>> {
        expand_plan(self.id, &self.parameters, self.domain, &self.points, seed)
    }
}

impl Transformation {
    pub fn check_domain(&self, point: &Point) -> Result<()> {
        check_names(self.id, &self.parameters, point)?;
        (self.domain)(point)
    }

    pub fn default_points(&self, seed: u64) -> Result<Vec<Point>> {
        expand_plan(self.id, &self.parameters, self.domain, &self.points, seed)
    }

    pub fn uses_z(&self) -> bool {
        self.parameters.contains(&"z")
    }
}

fn check_names(id: &str, names: &[&str], point: &Point) -> Result<()> {
    for (name, value) in point.iter() {
        if !names.contains(&name) {
            return Err(Error::Domain(format!("{id} has no parameter '{name}'")));
        }
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Domain(format!("{id}: parameter '{name}' is not finite")));
        }
    }
    for name in names {
        if point.get(name).is_none() {
            return Err(Error::Domain(format!("{id}: missing parameter '{name}'")));
        }
    }
    Ok(())
}

/// FNV-1a, so that each registry id draws an independent stream from one seed.
fn stable_hash(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn rng_for(id: &str, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stable_hash(id))
}

fn expand_plan(
    id: &str,
    names: &[&'static str],
    domain: DomainPredicate,
    plan: &PointPlan,
    seed: u64,
) -> Result<Vec<Point>> {
    match plan {
        PointPlan::Fixed(points) => Ok(points.clone()),
        PointPlan::Sampled { real, complex } => {
            let mut pool: Vec<ComplexValue> = REAL_POOL.iter().map(|&r| ComplexValue::new(r, 0.0)).collect();
            pool.extend(COMPLEX_POOL.iter().map(|&(re, im)| ComplexValue::new(re, im)));
            let mut real_points = Vec::new();
            let mut complex_points = Vec::new();
            for combo in cartesian(pool.len(), names.len()) {
                let point = names
                    .iter()
                    .zip(&combo)
                    .fold(Point::new(), |point, (name, &i)| point.with(name, pool[i]));
                if domain(&point).is_err() {
                    continue;
                }
                if point.iter().all(|(_, v)| v.im == 0.0) {
                    real_points.push(point);
                } else {
                    complex_points.push(point);
                }
            }
            let mut rng = rng_for(id, seed);
            real_points.shuffle(&mut rng);
            complex_points.shuffle(&mut rng);
            real_points.truncate(*real);
            complex_points.truncate(*complex);
            real_points.extend(complex_points);
            Ok(real_points)
        }
        PointPlan::WithZ { base, per_point } => {
            let mut rng = rng_for(id, seed);
            let mut points = Vec::with_capacity(base.len() * per_point);
            for point in base {
                for _ in 0..*per_point {
                    points.push(sample_z(id, point, domain, &mut rng)?);
                }
            }
            Ok(points)
        }
    }
}

/// Rejection sampling of z from the box |Re z| ≤ 0.6, |Im z| ≤ 0.4.
pub(crate) fn sample_z(id: &str, base: &Point, domain: DomainPredicate, rng: &mut impl Rng) -> Result<Point> {
    for _ in 0..10_000 {
        let z = ComplexValue::new(rng.gen_range(-0.6..0.6), rng.gen_range(-0.4..0.4));
        let point = base.clone().with("z", z);
        if domain(&point).is_ok() {
            return Ok(point);
        }
    }
    Err(Error::Domain(format!("{id}: no legal z found for {base}")))
}

fn cartesian(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..base).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}
