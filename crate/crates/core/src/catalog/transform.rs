//! Transformation and summation formulas checked as two-sided residuals.

use super::expr::{c, gamma_product, hyp2f1, p, pow, series, Expr, SeriesTemplate};
use super::identity::{Citation, PointPlan, Transformation};
use super::point::Point;
use super::registry::{off_poles, param, require, UNIT_IDENTITY_TOL};
use crate::error::Result;
use crate::ComplexValue;

/// Tolerance for the transformation residuals away from unit argument.
pub const TRANSFORMATION_TOL: f64 = 1e-10;
/// Largest modulus of any series argument produced by a legal z.
pub const MAX_ARGUMENT: f64 = 0.9;

/// Legal z draws per base parameter point.
const Z_PER_POINT: usize = 5;

fn e() -> Expr {
    p("a") + p("b") + 0.5
}

fn cx(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn r(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

fn small(value: ComplexValue, what: &str) -> Result<()> {
    require(value.norm() <= MAX_ARGUMENT, || {
        format!("|{what}| = {} exceeds {MAX_ARGUMENT}", value.norm())
    })
}

fn ab_points() -> Vec<Point> {
    vec![
        Point::new().with("a", 0.3).with("b", 0.45),
        Point::new().with("a", cx(0.2, -0.2)).with("b", 0.25),
    ]
}

fn abc_points() -> Vec<Point> {
    [(r(0.3), r(0.2), r(0.45)), (cx(0.3, 0.1), r(0.25), r(-0.35))]
        .iter()
        .map(|&(a, b, cc)| Point::new().with("a", a).with("b", b).with("c", cc))
        .collect()
}

/// (a, b, c) points of the Watson-type sums, all with Re(c - a - b) > 0.
fn watson_points() -> Vec<Point> {
    [
        (r(0.1), r(0.2), r(0.5)),
        (r(0.25), r(0.25), r(1.0)),
        (r(0.3), r(-0.2), r(0.4)),
        (cx(0.2, 0.1), r(0.1), r(0.8)),
    ]
    .iter()
    .map(|&(a, b, cc)| Point::new().with("a", a).with("b", b).with("c", cc))
    .collect()
}

fn tr_2_11_2_domain(point: &Point) -> Result<()> {
    let (a, b, z) = (param(point, "a"), param(point, "b"), param(point, "z"));
    off_poles(&[(a + b + 0.5, "a+b+1/2")])?;
    require(z.re < 0.5, || format!("Re z must be < 1/2, got {}", z.re))?;
    small(z, "z")?;
    small(4.0 * z * (1.0 - z), "4z(1-z)")
}

fn tr_2_11_7_domain(point: &Point) -> Result<()> {
    let (a, b, z) = (param(point, "a"), param(point, "b"), param(point, "z"));
    off_poles(&[(a + b + 0.5, "a+b+1/2"), (a + 0.5, "a+1/2"), (b + 0.5, "b+1/2")])?;
    small(z * z, "z^2")?;
    small((1.0 + z) / 2.0, "(1+z)/2")?;
    small((1.0 - z) / 2.0, "(1-z)/2")
}

fn tr_2_11_5_domain(point: &Point) -> Result<()> {
    let (b, z) = (param(point, "b"), param(point, "z"));
    off_poles(&[(2.0 * b, "2b"), (b + 0.5, "b+1/2")])?;
    small(z, "z")?;
    small(4.0 * z / ((1.0 + z) * (1.0 + z)), "4z/(1+z)^2")
}

fn tr_4_5_1_domain(point: &Point) -> Result<()> {
    let (a, b, cc, z) = (
        param(point, "a"),
        param(point, "b"),
        param(point, "c"),
        param(point, "z"),
    );
    off_poles(&[(a - b + 1.0, "a-b+1"), (a - cc + 1.0, "a-c+1")])?;
    small(z, "z")?;
    small(4.0 * z / ((1.0 + z) * (1.0 + z)), "4z/(1+z)^2")
}

fn gauss_domain(point: &Point) -> Result<()> {
    let (a, b, cc) = (param(point, "a"), param(point, "b"), param(point, "c"));
    require((cc - a - b).re > 0.0, || "Re(c-a-b) must be > 0".into())?;
    off_poles(&[(cc, "c"), (cc - a, "c-a"), (cc - b, "c-b")])
}

fn kummer_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    off_poles(&[(a + b + 0.5, "a+b+1/2")])
}

fn half_argument_domain(point: &Point) -> Result<()> {
    let (a, cc) = (param(point, "a"), param(point, "c"));
    off_poles(&[
        (cc + 1.0, "c+1"),
        (cc / 2.0 + 1.0, "c/2+1"),
        ((cc + 1.0) / 2.0, "(c+1)/2"),
    ])?;
    off_poles(&[((cc - a) / 2.0 + 1.0, "(c-a)/2+1"), ((cc + a + 1.0) / 2.0, "(c+a+1)/2")])
}

fn watson_domain(point: &Point) -> Result<()> {
    let (a, b, cc) = (param(point, "a"), param(point, "b"), param(point, "c"));
    require((cc - a - b).re > -0.5, || "Re(c-a-b) must be > -1/2".into())?;
    off_poles(&[
        (a + b + 0.5, "a+b+1/2"),
        (2.0 * cc, "2c"),
        (cc + 0.5, "c+1/2"),
        (0.5 - a - b + cc, "1/2-a-b+c"),
    ])
}

fn watson_pm_domain(point: &Point) -> Result<()> {
    let (a, b, cc, eps) = (
        param(point, "a"),
        param(point, "b"),
        param(point, "c"),
        param(point, "eps"),
    );
    require(eps == r(1.0) || eps == r(-1.0), || {
        format!("eps must be +1 or -1, got {eps}")
    })?;
    require((cc - a - b).re > (eps.re - 1.0) / 2.0, || {
        "Re(c-a-b) must exceed (eps-1)/2".into()
    })?;
    off_poles(&[
        (a + b + 0.5, "a+b+1/2"),
        (2.0 * cc, "2c"),
        (cc, "c"),
        (cc - a - b, "c-a-b"),
    ])
}

/// ₃F₂ at unit argument as a series node.
fn f32_at_one(numerators: Vec<Expr>, denominators: Vec<Expr>) -> Expr {
    series(SeriesTemplate::hypergeometric(numerators, denominators), c(1.0))
}

fn f32_at(numerators: Vec<Expr>, denominators: Vec<Expr>, arg: Expr) -> Expr {
    series(SeriesTemplate::hypergeometric(numerators, denominators), arg)
}

fn kummer_ratio() -> Expr {
    gamma_product(vec![c(0.5), e()], vec![p("a") + 0.5, p("b") + 0.5])
}

fn quadratic_argument() -> Expr {
    4.0 * p("z") / ((1.0 + p("z")) * (1.0 + p("z")))
}

pub fn transformations() -> Vec<Transformation> {
    let (a, b, cc, z) = (p("a"), p("b"), p("c"), p("z"));
    vec![
        Transformation {
            id: "TR-2.11.2",
            citation: Citation {
                anchor: "Quadratic transformation 2.11.2",
                quote: "Starting from the quadratic transformation formula",
            },
            parameters: vec!["a", "b", "z"],
            domain: tr_2_11_2_domain,
            lhs: hyp2f1(2.0 * a.clone(), 2.0 * b.clone(), e(), z.clone()),
            rhs: hyp2f1(a.clone(), b.clone(), e(), 4.0 * z.clone() * (1.0 - z.clone())),
            points: PointPlan::WithZ {
                base: ab_points(),
                per_point: Z_PER_POINT,
            },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "TR-2.11.7",
            citation: Citation {
                anchor: "Quadratic transformation 2.11.7",
                quote: "Consider formula 2.11.7 in",
            },
            parameters: vec!["a", "b", "z"],
            domain: tr_2_11_7_domain,
            lhs: 2.0 * kummer_ratio() * hyp2f1(a.clone(), b.clone(), c(0.5), z.clone() * z.clone()),
            rhs: hyp2f1(2.0 * a.clone(), 2.0 * b.clone(), e(), (1.0 + z.clone()) / 2.0)
                + hyp2f1(2.0 * a.clone(), 2.0 * b.clone(), e(), (1.0 - z.clone()) / 2.0),
            points: PointPlan::WithZ {
                base: ab_points(),
                per_point: Z_PER_POINT,
            },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "TR-2.11.5",
            citation: Citation {
                anchor: "Quadratic transformation 2.11.5",
                quote: "In the formula 2.11.5 from",
            },
            parameters: vec!["a", "b", "z"],
            domain: tr_2_11_5_domain,
            lhs: pow(1.0 + z.clone(), -2.0 * a.clone())
                * hyp2f1(a.clone(), b.clone(), 2.0 * b.clone(), quadratic_argument()),
            rhs: hyp2f1(
                a.clone(),
                a.clone() + 0.5 - b.clone(),
                b.clone() + 0.5,
                z.clone() * z.clone(),
            ),
            points: PointPlan::WithZ {
                base: ab_points(),
                per_point: Z_PER_POINT,
            },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "TR-4.5.1",
            citation: Citation {
                anchor: "Quadratic transformation 4.5.1",
                quote: "In the quadratic transformation formula 4.5.1",
            },
            parameters: vec!["a", "b", "c", "z"],
            domain: tr_4_5_1_domain,
            lhs: f32_at(
                vec![a.clone(), b.clone(), cc.clone()],
                vec![a.clone() - b.clone() + 1.0, a.clone() - cc.clone() + 1.0],
                -z.clone(),
            ),
            rhs: pow(1.0 + z.clone(), -a.clone())
                * f32_at(
                    vec![
                        a.clone() - b.clone() - cc.clone() + 1.0,
                        a.clone() / 2.0,
                        (a.clone() + 1.0) / 2.0,
                    ],
                    vec![a.clone() - b.clone() + 1.0, a.clone() - cc.clone() + 1.0],
                    quadratic_argument(),
                ),
            points: PointPlan::WithZ {
                base: abc_points(),
                per_point: Z_PER_POINT,
            },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "SUM-2.8.46",
            citation: Citation {
                anchor: "Gauss summation 2.8.46",
                quote: "differentiate Gauss' summation formula",
            },
            parameters: vec!["a", "b", "c"],
            domain: gauss_domain,
            lhs: hyp2f1(a.clone(), b.clone(), cc.clone(), c(1.0)),
            rhs: gamma_product(
                vec![cc.clone(), cc.clone() - a.clone() - b.clone()],
                vec![cc.clone() - a.clone(), cc.clone() - b.clone()],
            ),
            points: PointPlan::Fixed(
                [
                    (r(0.25), r(0.25), r(1.5)),
                    (r(0.3), r(-0.2), r(0.9)),
                    (cx(0.2, 0.1), r(0.45), r(1.4)),
                ]
                .iter()
                .map(|&(a, b, cc)| Point::new().with("a", a).with("b", b).with("c", cc))
                .collect(),
            ),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Transformation {
            id: "SUM-2.8.50",
            citation: Citation {
                anchor: "Kummer summation 2.8.50",
                quote: "differentiating Kummer's summation formula",
            },
            parameters: vec!["a", "b"],
            domain: kummer_domain,
            lhs: hyp2f1(2.0 * a.clone(), 2.0 * b.clone(), e(), c(0.5)),
            rhs: kummer_ratio(),
            points: PointPlan::Sampled { real: 3, complex: 2 },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "SUM-2.8.51",
            citation: Citation {
                anchor: "Summation formula 2.8.51",
                quote: "the summation formula 2.8.51 in",
            },
            parameters: vec!["a", "c"],
            domain: half_argument_domain,
            lhs: hyp2f1(a.clone(), 1.0 - a.clone(), cc.clone() + 1.0, c(0.5)),
            rhs: gamma_product(
                vec![cc.clone() / 2.0 + 1.0, (cc.clone() + 1.0) / 2.0],
                vec![
                    (cc.clone() - a.clone()) / 2.0 + 1.0,
                    (cc.clone() + a.clone() + 1.0) / 2.0,
                ],
            ),
            points: PointPlan::Sampled { real: 3, complex: 2 },
            accel_required: false,
            tol: TRANSFORMATION_TOL,
        },
        Transformation {
            id: "WATSON",
            citation: Citation {
                anchor: "Watson's sum",
                quote: "analogs of Watson's sum",
            },
            parameters: vec!["a", "b", "c"],
            domain: watson_domain,
            lhs: f32_at_one(
                vec![2.0 * a.clone(), 2.0 * b.clone(), cc.clone()],
                vec![e(), 2.0 * cc.clone()],
            ),
            rhs: gamma_product(
                vec![c(0.5), e(), cc.clone() + 0.5, 0.5 - a.clone() - b.clone() + cc.clone()],
                vec![
                    a.clone() + 0.5,
                    b.clone() + 0.5,
                    0.5 - a.clone() + cc.clone(),
                    0.5 - b.clone() + cc.clone(),
                ],
            ),
            points: PointPlan::Fixed(watson_points()),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Transformation {
            id: "WATSON-PM",
            citation: Citation {
                anchor: "Watson-type analogs",
                quote: "can be compactly written as",
            },
            parameters: vec!["a", "b", "c", "eps"],
            domain: watson_pm_domain,
            lhs: f32_at_one(
                vec![2.0 * a.clone(), 2.0 * b.clone(), cc.clone() + p("eps") / 2.0],
                vec![e(), 2.0 * cc.clone()],
            ),
            rhs: watson_pm_even() + p("eps") * watson_pm_odd(),
            points: PointPlan::Fixed(
                watson_points()
                    .into_iter()
                    .flat_map(|point| [1.0, -1.0].map(|eps| point.clone().with("eps", eps)))
                    .collect(),
            ),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
    ]
}

/// The ε-independent gamma term of the Watson-type analogs.
pub fn watson_pm_even() -> Expr {
    let (a, b, cc) = (p("a"), p("b"), p("c"));
    gamma_product(
        vec![c(0.5), cc.clone(), e(), cc.clone() - a.clone() - b.clone()],
        vec![a.clone() + 0.5, b.clone() + 0.5, cc.clone() - a, cc - b],
    )
}

/// The gamma term multiplied by ε in the Watson-type analogs.
pub fn watson_pm_odd() -> Expr {
    let (a, b, cc) = (p("a"), p("b"), p("c"));
    gamma_product(
        vec![c(0.5), cc.clone(), e(), cc.clone() - a.clone() - b.clone()],
        vec![a.clone(), b.clone(), cc.clone() - a + 0.5, cc - b + 0.5],
    )
}
