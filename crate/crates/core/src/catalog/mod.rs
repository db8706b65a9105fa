//! The identity catalog: closed-form expression trees, declarative
//! left-hand series, parameter domains, default sample points, and the
//! verification engine that compares both sides.

mod checks;
mod expr;
mod identity;
mod point;
mod registry;
mod transform;
mod verify;

pub use checks::{
    boundary_asymptotic_check, boundary_log_slope, finite_sum_instance, ode_residual, ode_residual_for,
    FiniteSumInstance, OdeSubject, BOUNDARY_MAX_TERMS,
};
pub use expr::{
    c, cos, elliptic_k_of, gamma_of, gamma_product, hyp2f1, ln_gamma_of, log, p, pi, pow, psi, series, sin, sqrt,
    EvalContext, Expr, SeriesTemplate, WeightTemplate, GEOMETRIC_TOL_MARGIN, MIN_SERIES_TOL,
};
pub use identity::{Citation, DomainPredicate, Identity, PointPlan, Transformation, COMPLEX_POOL, REAL_POOL};
pub use point::Point;
pub use registry::{algebraic_points, IDENTITY_TOL, UNIT_IDENTITY_TOL};
pub use transform::{watson_pm_even, watson_pm_odd, MAX_ARGUMENT, TRANSFORMATION_TOL};
pub use verify::{
    check_transformation, eval_lhs, eval_rhs, list_identities, standard, verify, Catalog, Entry, EntryKind, Listing,
    VerificationResult, VerifyOptions, DEFAULT_SEED, SERIES_TOL_FLOOR,
};
