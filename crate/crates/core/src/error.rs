use thiserror::Error;

/// Every failure the library reports. Mismatches between the two sides of an
/// identity are *not* errors; they show up as `pass = false`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge after {terms} terms (tail bound {tail_bound:.3e})")]
    NonConvergent { terms: usize, tail_bound: f64 },

    #[error("acceleration breakdown: {0}")]
    AccelerationBreakdown(String),

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
