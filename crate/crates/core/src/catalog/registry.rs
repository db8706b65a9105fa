//! The identity registry.

use super::expr::{
    c, cos, elliptic_k_of, gamma_of, gamma_product, hyp2f1, log, p, pi, pow, psi, series, sin, sqrt, Expr,
    SeriesTemplate, WeightTemplate,
};
use super::identity::{Citation, Identity, PointPlan};
use super::point::Point;
use crate::error::{Error, Result};
use crate::scalar::is_nonpositive_integer;
use crate::specialfn::POLE_TOLERANCE;
use crate::ComplexValue;

/// Tolerance for identities whose series all have |x| < 1.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Tolerance for identities with an accelerated unit-argument series.
pub const UNIT_IDENTITY_TOL: f64 = 1e-6;

pub(crate) fn param(point: &Point, name: &str) -> ComplexValue {
    point
        .get(name)
        .expect("parameter names are checked before the predicate")
}

pub(crate) fn require(condition: bool, message: impl FnOnce() -> String) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::Domain(message()))
    }
}

/// Fails when `z` sits on a pole of Γ/ψ.
pub(crate) fn off_poles(values: &[(ComplexValue, &str)]) -> Result<()> {
    for (z, what) in values {
        require(!is_nonpositive_integer(*z, POLE_TOLERANCE), || {
            format!("{what} = {z} is a non-positive integer")
        })?;
    }
    Ok(())
}

pub(crate) fn real_in(value: ComplexValue, lo: f64, hi: f64, what: &str) -> Result<()> {
    require(value.im == 0.0 && value.re > lo && value.re < hi, || {
        format!("{what} must be real in ({lo}, {hi}), got {value}")
    })
}

fn e() -> Expr {
    p("a") + p("b") + 0.5
}

fn harmonic(stride: usize) -> WeightTemplate {
    WeightTemplate::harmonic(stride)
}

fn combo(terms: Vec<(f64, WeightTemplate)>) -> WeightTemplate {
    WeightTemplate::LinearCombo(terms.into_iter().map(|(k, w)| (c(k), w)).collect())
}

/// Σ (n₁)_n…/((d₁)_n… (n!)^power) · ratioⁿ · w_n from n = 1.
fn weighted(
    numerators: Vec<Expr>,
    denominators: Vec<Expr>,
    power: u32,
    ratio: f64,
    weight: WeightTemplate,
) -> SeriesTemplate {
    SeriesTemplate::hypergeometric(numerators, denominators)
        .factorial_power(power)
        .ratio(c(ratio))
        .weighted(weight)
}

fn points_1(name: &str, values: &[f64]) -> PointPlan {
    PointPlan::Fixed(values.iter().map(|&v| Point::new().with(name, v)).collect())
}

fn points_2(names: [&str; 2], values: &[(ComplexValue, ComplexValue)]) -> PointPlan {
    PointPlan::Fixed(
        values
            .iter()
            .map(|&(x, y)| Point::new().with(names[0], x).with(names[1], y))
            .collect(),
    )
}

fn cx(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn r(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

fn tenths() -> Vec<f64> {
    (1..=9).map(|i| f64::from(i) / 10.0).collect()
}

fn no_params(_: &Point) -> Result<()> {
    Ok(())
}

fn gauss_quadratic_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    off_poles(&[(a + b + 0.5, "a+b+1/2")])
}

fn cor_a1_domain(point: &Point) -> Result<()> {
    let a = param(point, "a");
    off_poles(&[(a + 1.5, "a+3/2"), (a + 0.5, "a+1/2")])
}

fn cor_a2_domain(point: &Point) -> Result<()> {
    let a = param(point, "a");
    off_poles(&[(1.0 - a / 2.0, "1-a/2"), ((a + 1.0) / 2.0, "(a+1)/2")])
}

fn choi_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    off_poles(&[
        (a + b + 0.5, "a+b+1/2"),
        (2.0 * b, "2b"),
        (a + 0.5, "a+1/2"),
        (b + 0.5, "b+1/2"),
    ])
}

fn modulus_domain(point: &Point) -> Result<()> {
    real_in(param(point, "k"), 0.0, 1.0, "k")
}

fn unit_interval_x(point: &Point) -> Result<()> {
    // both x and 1 - x are summed directly, so each must stay ≤ 0.96
    real_in(param(point, "x"), 0.04 - 1e-12, 0.96 + 1e-12, "x")
}

fn thm_b_domain(point: &Point) -> Result<()> {
    let a = param(point, "a");
    require((a - a.re.round()).norm() > POLE_TOLERANCE, || {
        format!("a = {a} must not be an integer")
    })?;
    cor_a2_domain(point)?;
    unit_interval_x(point)
}

fn branch_domain(point: &Point) -> Result<()> {
    let branch = param(point, "branch");
    require(branch == r(1.0) || branch == r(2.0), || {
        format!("branch must be 1 or 2, got {branch}")
    })
}

fn thm_c_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    require((a + b).re < 0.5, || {
        format!("Re(a+b) must be < 1/2, got {}", (a + b).re)
    })?;
    require(
        (2.0 * a - 1.0).norm() > POLE_TOLERANCE && (2.0 * b - 1.0).norm() > POLE_TOLERANCE,
        || "2a - 1 and 2b - 1 must be nonzero".into(),
    )?;
    off_poles(&[
        (a + b + 0.5, "a+b+1/2"),
        (1.0 - a, "1-a"),
        (1.0 - b, "1-b"),
        (1.5 - a - b, "3/2-a-b"),
    ])
}

fn gauss_derivative_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    require((a + b).re < 0.5, || {
        format!("Re(a+b) must be < 1/2, got {}", (a + b).re)
    })?;
    off_poles(&[(0.5 - a - b, "1/2-a-b"), (0.5 - a, "1/2-a"), (0.5 - b, "1/2-b")])
}

fn thm_d_domain(point: &Point) -> Result<()> {
    let (a, b) = (param(point, "a"), param(point, "b"));
    require((a + b).re > 0.0, || format!("Re(a+b) must be > 0, got {}", (a + b).re))?;
    off_poles(&[(1.0 + a, "1+a"), (1.0 + b, "1+b")])
}

fn thm_e_domain(point: &Point) -> Result<()> {
    let b = param(point, "b");
    require(b.re > 0.5, || format!("Re b must be > 1/2, got {}", b.re))?;
    off_poles(&[(b, "b"), (2.0 * b - 0.5, "2b-1/2"), (b + 0.5, "b+1/2")])
}

fn thm_c_points() -> Vec<(ComplexValue, ComplexValue)> {
    vec![
        (r(0.1), r(0.1)),
        (r(0.1), r(-0.3)),
        (r(0.25), r(-0.05)),
        (r(0.45), r(-0.25)),
        (cx(0.3, 0.1), r(-0.2)),
        (cx(0.2, -0.2), r(-0.1)),
    ]
}

/// Σ C(2n,n)² wₙ / 32ⁿ = Σ (½)ₙ² / (n!)² · wₙ / 2ⁿ.
fn central_binomial_32(weight: WeightTemplate) -> SeriesTemplate {
    weighted(vec![c(0.5), c(0.5)], vec![], 2, 0.5, weight)
}

/// Σ (3n)!/(n!)³ wₙ / 54ⁿ = Σ (⅓)ₙ(⅔)ₙ / (n!)² · wₙ / 2ⁿ.
fn trinomial_54(weight: WeightTemplate) -> SeriesTemplate {
    weighted(vec![c(1.0 / 3.0), c(2.0 / 3.0)], vec![], 2, 0.5, weight)
}

fn lemniscate_prefactor(denominator: f64) -> Expr {
    pow(gamma_of(c(0.25)), c(2.0)) / (denominator * sqrt(pi()))
}

fn trinomial_prefactor() -> Expr {
    pow(gamma_of(c(1.0 / 3.0)), c(3.0)) / (pow(c(2.0), c(7.0 / 3.0)) * pi())
}

/// ₂F₁(a, 1-a; 1; arg).
fn legendre_f(arg: Expr) -> Expr {
    hyp2f1(p("a"), 1.0 - p("a"), c(1.0), arg)
}

fn cubic_f(arg: Expr) -> Expr {
    hyp2f1(c(1.0 / 3.0), c(2.0 / 3.0), c(1.0), arg)
}

/// ψ(1-a/2) + ψ((a+1)/2) - ψ(1) - ψ(1/2).
fn half_argument_digammas() -> Expr {
    psi(1.0 - p("a") / 2.0) + psi((p("a") + 1.0) / 2.0) - psi(c(1.0)) - psi(c(0.5))
}

/// The two algebraic arguments of the cubic ₂F₁ special value.
pub fn algebraic_points() -> (f64, f64) {
    let s3 = 3f64.sqrt();
    (3.0 * (3.0 - s3) / 4.0, (3.0 * s3 - 5.0) / 4.0)
}

pub fn identities() -> Vec<Identity> {
    let theorem_one = Citation {
        anchor: "Theorem 1",
        quote: "arbitrary complex numbers such that",
    };
    let examples = Citation {
        anchor: "Eq. (3)",
        quote: "are direct consequences of the Corollary",
    };
    let derived_examples = Citation {
        anchor: "Eq. (5)",
        quote: "To derive \\eqref{ex4} and \\eqref{ex5} observe",
    };
    let elliptic = Citation {
        anchor: "Elliptic generating functions",
        quote: "complete elliptic integrals of the first kind",
    };
    let (x1, x2) = algebraic_points();

    vec![
        Identity {
            id: "THM-A1",
            citation: Citation {
                anchor: "Theorem 1, first formula",
                ..theorem_one
            },
            parameters: vec!["a", "b"],
            domain: gauss_quadratic_domain,
            lhs_scale: c(2.0),
            lhs_series: weighted(vec![2.0 * p("a"), 2.0 * p("b")], vec![e()], 1, 0.5, harmonic(1)),
            lhs_arg: c(1.0),
            rhs: series(weighted(vec![p("a"), p("b")], vec![e()], 1, 1.0, harmonic(1)), c(1.0)),
            points: PointPlan::Sampled { real: 10, complex: 10 },
            accel_required: true,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "THM-A2",
            citation: Citation {
                anchor: "Theorem 1, second formula",
                ..theorem_one
            },
            parameters: vec!["a", "b"],
            domain: gauss_quadratic_domain,
            lhs_scale: c(4.0),
            lhs_series: weighted(
                vec![2.0 * p("a"), 2.0 * p("b")],
                vec![e()],
                1,
                0.5,
                WeightTemplate::HarmonicSqPlusGen2,
            ),
            lhs_arg: c(1.0),
            rhs: series(
                weighted(
                    vec![p("a"), p("b")],
                    vec![e()],
                    1,
                    1.0,
                    WeightTemplate::HarmonicSqPlusGen2,
                ),
                c(1.0),
            ),
            points: PointPlan::Sampled { real: 10, complex: 10 },
            accel_required: true,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "COR-A1",
            citation: Citation {
                anchor: "Corollary (digamma form)",
                quote: "denote the digamma function",
            },
            parameters: vec!["a"],
            domain: cor_a1_domain,
            lhs_scale: c(1.0),
            // (n+1) = (2)ₙ / n!
            lhs_series: weighted(vec![2.0 * p("a"), c(2.0)], vec![p("a") + 1.5], 1, 0.5, harmonic(1)),
            lhs_arg: c(1.0),
            rhs: (p("a") + 0.5) * (psi(p("a") + 0.5) - psi(c(0.5))),
            points: points_1("a", &tenths()),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "COR-A2",
            citation: Citation {
                anchor: "Corollary (argument 1/2)",
                quote: "the easiest way to prove",
            },
            parameters: vec!["a"],
            domain: cor_a2_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(vec![p("a"), 1.0 - p("a")], vec![], 2, 0.5, harmonic(1)),
            lhs_arg: c(1.0),
            rhs: sqrt(pi()) / (2.0 * gamma_of(1.0 - p("a") / 2.0) * gamma_of((p("a") + 1.0) / 2.0))
                * half_argument_digammas(),
            points: points_1("a", &[1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5, 0.7]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "EX-1",
            citation: examples,
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            lhs_series: central_binomial_32(harmonic(1)),
            lhs_arg: c(1.0),
            rhs: lemniscate_prefactor(4.0) * (1.0 - 4.0 * log(c(2.0)) / pi()),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "EX-2",
            citation: Citation {
                anchor: "Eq. (4)",
                ..examples
            },
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            lhs_series: trinomial_54(harmonic(1)),
            lhs_arg: c(1.0),
            rhs: trinomial_prefactor() * (sqrt(c(3.0)) - 9.0 * log(c(3.0)) / (2.0 * pi())),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "EX-3",
            citation: derived_examples,
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            lhs_series: central_binomial_32(harmonic(2)),
            lhs_arg: c(1.0),
            rhs: lemniscate_prefactor(8.0) * (1.0 - 3.0 * log(c(2.0)) / pi()),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "EX-4",
            citation: Citation {
                anchor: "Eq. (6)",
                ..derived_examples
            },
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            lhs_series: trinomial_54(harmonic(3)),
            lhs_arg: c(1.0),
            rhs: trinomial_prefactor() * (1.0 / sqrt(c(3.0)) + (2.0 * log(c(2.0)) - 3.0 * log(c(3.0))) / (2.0 * pi())),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "SUM-CHOI",
            citation: Citation {
                anchor: "Derivative of Kummer's sum",
                quote: "with respect to $b$ yields the summation formula",
            },
            parameters: vec!["a", "b"],
            domain: choi_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(
                vec![2.0 * p("a"), 2.0 * p("b")],
                vec![e()],
                1,
                0.5,
                WeightTemplate::DigammaDiffSum { a: p("a"), b: p("b") },
            ),
            lhs_arg: c(1.0),
            // the b-derivative of the Kummer gamma ratio carries the factor ψ(e) - ψ(b+1/2)
            rhs: gamma_product(vec![c(0.5), e()], vec![p("a") + 0.5, p("b") + 0.5]) * (psi(e()) - psi(p("b") + 0.5)),
            points: points_2(
                ["a", "b"],
                &[
                    (r(0.25), r(0.25)),
                    (r(0.3), r(0.15)),
                    (r(0.1), r(0.45)),
                    (cx(0.2, -0.2), cx(0.3, 0.1)),
                ],
            ),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "SUM-MIX",
            citation: Citation {
                anchor: "Specialization a = b = 1/4",
                quote: "from which by specializing",
            },
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            lhs_series: central_binomial_32(combo(vec![(4.0, harmonic(2)), (-3.0, harmonic(1))])),
            lhs_arg: c(1.0),
            rhs: lemniscate_prefactor(4.0) * (6.0 * log(c(2.0)) / pi() - 1.0),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "GF-K1",
            citation: elliptic,
            parameters: vec!["k"],
            domain: modulus_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(vec![c(0.5), c(0.5)], vec![], 2, 1.0, harmonic(1)),
            lhs_arg: p("k") * p("k"),
            rhs: elliptic_k_of(sqrt(1.0 - p("k") * p("k")))
                + elliptic_k_of(p("k")) / pi() * log(p("k") * p("k") / (16.0 * (1.0 - p("k") * p("k")))),
            points: points_1("k", &tenths()),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "GF-K2",
            citation: elliptic,
            parameters: vec!["k"],
            domain: modulus_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(vec![c(0.5), c(0.5)], vec![], 2, 1.0, harmonic(2)),
            lhs_arg: p("k") * p("k"),
            rhs: 0.5 * elliptic_k_of(sqrt(1.0 - p("k") * p("k")))
                + elliptic_k_of(p("k")) / pi() * log(p("k") / (4.0 * (1.0 - p("k") * p("k")))),
            points: points_1("k", &tenths()),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "THM-B",
            citation: Citation {
                anchor: "Eq. (8)",
                quote: "The following generalization of Corollary",
            },
            parameters: vec!["a", "x"],
            domain: thm_b_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(vec![p("a"), 1.0 - p("a")], vec![], 2, 1.0, harmonic(1)),
            lhs_arg: p("x"),
            rhs: pi() / (2.0 * sin(pi() * p("a"))) * legendre_f(1.0 - p("x"))
                + 0.5
                    * (half_argument_digammas() - pi() / sin(pi() * p("a")) - log((1.0 - p("x")) / p("x")))
                    * legendre_f(p("x")),
            points: PointPlan::Fixed(
                [0.5, 1.0 / 3.0, 0.25, 1.0 / 6.0]
                    .iter()
                    .flat_map(|&a| {
                        tenths()
                            .into_iter()
                            .map(move |x| Point::new().with("a", a).with("x", x))
                    })
                    .collect(),
            ),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "EQ-H3N",
            citation: Citation {
                anchor: "Eq. (9)",
                quote: "worth mentioning the summation formula",
            },
            parameters: vec!["x"],
            domain: unit_interval_x,
            lhs_scale: c(1.0),
            // (3n)!/((n!)³ 27ⁿ) = (⅓)ₙ(⅔)ₙ/(n!)²
            lhs_series: weighted(vec![c(1.0 / 3.0), c(2.0 / 3.0)], vec![], 2, 1.0, harmonic(3)),
            lhs_arg: p("x"),
            rhs: pi() / (3.0 * sqrt(c(3.0))) * cubic_f(1.0 - p("x"))
                - cubic_f(p("x")) * log(sqrt(3.0 * (1.0 - p("x"))) / pow(p("x"), c(1.0 / 6.0))),
            points: points_1("x", &tenths()),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "VAL-ALG",
            citation: Citation {
                anchor: "Algebraic special values",
                quote: "closed form in terms of gamma",
            },
            parameters: vec!["branch"],
            domain: branch_domain,
            // branch 1: ₂F₁(⅓,⅔;1;x₁); branch 2: √3 · ₂F₁(⅓,⅔;1;x₂)
            lhs_scale: pow(c(3.0), (p("branch") - 1.0) / 2.0),
            lhs_series: SeriesTemplate::hypergeometric(vec![c(1.0 / 3.0), c(2.0 / 3.0)], vec![c(1.0)]),
            lhs_arg: c(x1) + (p("branch") - 1.0) * (x2 - x1),
            rhs: pow(c(3.0), c(3.0 / 8.0)) * pow(2.0 + sqrt(c(3.0)), c(0.25)) * pow(gamma_of(c(0.25)), c(2.0))
                / pow(2.0 * pi(), c(1.5)),
            points: points_1("branch", &[1.0, 2.0]),
            accel_required: false,
            tol: IDENTITY_TOL,
        },
        Identity {
            id: "THM-C",
            citation: Citation {
                anchor: "Theorem (H_n/(n+1) sum)",
                quote: "Consider formula 2.11.7 in",
            },
            parameters: vec!["a", "b"],
            domain: thm_c_domain,
            lhs_scale: c(1.0),
            // 1/(n+1) = (1)ₙ/(2)ₙ
            lhs_series: weighted(
                vec![2.0 * p("a"), 2.0 * p("b"), c(1.0)],
                vec![e(), c(2.0)],
                1,
                1.0,
                harmonic(1),
            ),
            lhs_arg: c(1.0),
            rhs: (2.0 * p("a") + 2.0 * p("b") - 1.0) * sin(pi() * p("a")) * sin(pi() * p("b"))
                / ((2.0 * p("a") - 1.0) * (2.0 * p("b") - 1.0) * cos(pi() * (p("a") + p("b"))))
                * (psi(c(0.5)) + psi(1.5 - p("a") - p("b")) - psi(1.0 - p("a")) - psi(1.0 - p("b"))),
            points: points_2(["a", "b"], &thm_c_points()),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Identity {
            id: "SUM-GAUSSD",
            citation: Citation {
                anchor: "Derivative of Gauss' sum",
                quote: "differentiate Gauss' summation formula",
            },
            parameters: vec!["a", "b"],
            domain: gauss_derivative_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(
                vec![p("a"), p("b")],
                vec![c(0.5)],
                1,
                1.0,
                combo(vec![(2.0, harmonic(2)), (-1.0, harmonic(1))]),
            ),
            lhs_arg: c(1.0),
            rhs: -gamma_product(vec![c(0.5), 0.5 - p("a") - p("b")], vec![0.5 - p("a"), 0.5 - p("b")])
                * (psi(c(0.5)) + psi(0.5 - p("a") - p("b")) - psi(0.5 - p("a")) - psi(0.5 - p("b"))),
            points: points_2(["a", "b"], &thm_c_points()),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Identity {
            id: "THM-D",
            citation: Citation {
                anchor: "Theorem (ln 4 transformation)",
                quote: "we put $a=1$ and then",
            },
            parameters: vec!["a", "b"],
            domain: thm_d_domain,
            lhs_scale: c(1.0),
            lhs_series: weighted(
                vec![c(0.5), p("a") + p("b")],
                vec![1.0 + p("a"), 1.0 + p("b")],
                0,
                1.0,
                harmonic(1),
            ),
            lhs_arg: c(1.0),
            rhs: 4.0
                * series(
                    weighted(
                        vec![1.0 - p("a"), 1.0 - p("b")],
                        vec![1.0 + p("a"), 1.0 + p("b")],
                        0,
                        -1.0,
                        harmonic(1),
                    ),
                    c(1.0),
                )
                + series(
                    SeriesTemplate::hypergeometric(
                        vec![c(1.0), c(0.5), p("a") + p("b")],
                        vec![1.0 + p("a"), 1.0 + p("b")],
                    ),
                    c(1.0),
                ) * log(c(4.0)),
            points: points_2(
                ["a", "b"],
                &[
                    (r(0.3), r(0.4)),
                    (r(0.5), r(0.25)),
                    (r(0.05), r(0.1)),
                    (cx(0.2, -0.2), cx(0.3, 0.1)),
                    (r(1.0 / 3.0), r(0.45)),
                ],
            ),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Identity {
            id: "COR-D",
            citation: Citation {
                anchor: "Corollary (curious sum)",
                quote: "the following curious sum with harmonic",
            },
            parameters: vec![],
            domain: no_params,
            lhs_scale: c(1.0),
            // 1/(2n+1) = (½)ₙ/(3/2)ₙ; the weight is (1/4 - (-1)ⁿ) Hₙ
            lhs_series: weighted(
                vec![c(0.75), c(0.5)],
                vec![c(1.25), c(1.5)],
                0,
                1.0,
                combo(vec![
                    (0.25, harmonic(1)),
                    (-1.0, WeightTemplate::Alternating(Box::new(harmonic(1)))),
                ]),
            ),
            lhs_arg: c(1.0),
            rhs: pow(gamma_of(c(0.25)), c(4.0)) * log(c(2.0)) / (64.0 * pi()),
            points: PointPlan::Fixed(vec![Point::new()]),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
        Identity {
            id: "THM-E",
            citation: Citation {
                anchor: "Theorem (ln 2 relation)",
                quote: "we put $a=\\frac12$ and then",
            },
            parameters: vec!["b"],
            domain: thm_e_domain,
            lhs_scale: c(0.25),
            lhs_series: weighted(vec![c(0.5), p("b")], vec![2.0 * p("b")], 1, 1.0, harmonic(1)),
            lhs_arg: c(1.0),
            rhs: series(
                weighted(vec![c(0.5), 1.0 - p("b")], vec![p("b") + 0.5], 1, 1.0, harmonic(2)),
                c(1.0),
            ) + gamma_product(vec![p("b") + 0.5, 2.0 * p("b") - 1.0], vec![p("b"), 2.0 * p("b") - 0.5])
                * log(c(2.0)),
            points: points_1("b", &[0.75, 1.2, 2.0, 3.0]),
            accel_required: true,
            tol: UNIT_IDENTITY_TOL,
        },
    ]
}
