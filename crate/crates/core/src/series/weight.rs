//! Harmonic-type weights attached to each series term, maintained
//! incrementally alongside the term recurrence.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_nonpositive_integer, Real};
use crate::specialfn::POLE_TOLERANCE;

/// Weight w_n multiplying the n-th term.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightKind<T> {
    /// w_n = 1
    Unit,
    /// w_n = H_{stride·n + offset}; `offset = -1` requires a series starting at n = 1.
    Harmonic { stride: usize, offset: i64 },
    /// w_n = H_n² + H_n^{(2)}
    HarmonicSqPlusGen2,
    /// w_n = 1/(n+1)
    ReciprocalShift,
    /// w_n = Σ_{k=0}^{n-1} ( 2/(2b+k) − 1/(a+b+1/2+k) )
    DigammaDiffSum { a: Complex<T>, b: Complex<T> },
    /// w_n = (-1)^n · inner_n
    Alternating(Box<WeightKind<T>>),
    /// w_n = Σ c_i · inner_i(n)
    LinearCombo(Vec<(Complex<T>, WeightKind<T>)>),
}

impl<T: Real> WeightKind<T> {
    /// H_{stride·n}
    pub fn harmonic(stride: usize) -> Self {
        WeightKind::Harmonic { stride, offset: 0 }
    }

    pub fn alternating(inner: WeightKind<T>) -> Self {
        WeightKind::Alternating(Box::new(inner))
    }

    /// Highest power of log n in the large-n expansion of w_n.
    pub fn log_degree(&self) -> usize {
        match self {
            WeightKind::Unit | WeightKind::ReciprocalShift => 0,
            WeightKind::Harmonic { .. } | WeightKind::DigammaDiffSum { .. } => 1,
            WeightKind::HarmonicSqPlusGen2 => 2,
            WeightKind::Alternating(inner) => inner.log_degree(),
            WeightKind::LinearCombo(terms) => terms.iter().map(|(_, w)| w.log_degree()).max().unwrap_or(0),
        }
    }

    /// Reject weights that cannot be evaluated from `start`.
    pub fn validate(&self, start: usize) -> Result<()> {
        match self {
            WeightKind::Harmonic { stride, offset } => {
                if *stride == 0 {
                    return Err(Error::Domain("harmonic stride must be positive".into()));
                }
                if (*stride * start) as i64 + offset < 0 {
                    return Err(Error::Domain(format!(
                        "H_{{{stride}n{offset:+}}} is undefined at the start index {start}"
                    )));
                }
                Ok(())
            }
            WeightKind::DigammaDiffSum { a, b } => {
                let tol = T::lit(POLE_TOLERANCE);
                let two_b = *b * T::lit(2.0);
                let shifted = *a + *b + T::lit(0.5);
                if is_nonpositive_integer(two_b, tol) || is_nonpositive_integer(shifted, tol) {
                    return Err(Error::Pole("digamma-difference weight hits a zero denominator".into()));
                }
                Ok(())
            }
            WeightKind::Alternating(inner) => inner.validate(start),
            WeightKind::LinearCombo(terms) => terms.iter().try_for_each(|(_, w)| w.validate(start)),
            WeightKind::Unit | WeightKind::HarmonicSqPlusGen2 | WeightKind::ReciprocalShift => Ok(()),
        }
    }

    /// Incremental accumulator positioned at n = 0.
    pub fn state(&self) -> WeightState<T> {
        let kind = match self {
            WeightKind::Unit => StateKind::Unit,
            WeightKind::Harmonic { stride, offset } => StateKind::Harmonic {
                stride: *stride,
                offset: *offset,
                sum: Compensated::default(),
            },
            WeightKind::HarmonicSqPlusGen2 => StateKind::SqPlusGen2 {
                h1: Compensated::default(),
                h2: Compensated::default(),
            },
            WeightKind::ReciprocalShift => StateKind::Reciprocal,
            WeightKind::DigammaDiffSum { a, b } => StateKind::DigammaDiff {
                two_b: *b * T::lit(2.0),
                shifted: *a + *b + T::lit(0.5),
                sum: Complex::zero(),
            },
            WeightKind::Alternating(inner) => StateKind::Alternating(Box::new(inner.state())),
            WeightKind::LinearCombo(terms) => StateKind::Combo(terms.iter().map(|(c, w)| (*c, w.state())).collect()),
        };
        WeightState { n: 0, kind }
    }

    /// w_n computed from scratch.
    pub fn value_at(&self, n: usize) -> Complex<T> {
        let real = |x: T| Complex::new(x, T::zero());
        match self {
            WeightKind::Unit => Complex::one(),
            WeightKind::Harmonic { stride, offset } => {
                let idx = (*stride * n) as i64 + offset;
                real(super::harmonic::<T>(idx.max(0) as usize))
            }
            WeightKind::HarmonicSqPlusGen2 => {
                let h: T = super::harmonic(n);
                real(h * h + super::generalized_harmonic(n, 2))
            }
            WeightKind::ReciprocalShift => real(T::one() / T::from_usize_lossy(n + 1)),
            WeightKind::DigammaDiffSum { a, b } => (0..n).fold(Complex::zero(), |acc, k| {
                let k = T::from_usize_lossy(k);
                acc + (*b * T::lit(2.0) + k).inv() * T::lit(2.0) - (*a + *b + T::lit(0.5) + k).inv()
            }),
            WeightKind::Alternating(inner) => {
                let v = inner.value_at(n);
                if n.is_multiple_of(2) {
                    v
                } else {
                    -v
                }
            }
            WeightKind::LinearCombo(terms) => terms
                .iter()
                .fold(Complex::zero(), |acc, (c, w)| acc + *c * w.value_at(n)),
        }
    }
}

/// Running value of a [`WeightKind`] at the current index.
#[derive(Debug, Clone)]
pub struct WeightState<T> {
    n: usize,
    kind: StateKind<T>,
}

#[derive(Debug, Clone)]
enum StateKind<T> {
    Unit,
    Harmonic {
        stride: usize,
        offset: i64,
        sum: Compensated<T>,
    },
    SqPlusGen2 {
        h1: Compensated<T>,
        h2: Compensated<T>,
    },
    Reciprocal,
    DigammaDiff {
        two_b: Complex<T>,
        shifted: Complex<T>,
        sum: Complex<T>,
    },
    Alternating(Box<WeightState<T>>),
    Combo(Vec<(Complex<T>, WeightState<T>)>),
}

impl<T: Real> WeightState<T> {
    pub fn index(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> Complex<T> {
        let n = self.n;
        match &self.kind {
            StateKind::Unit => Complex::one(),
            StateKind::Harmonic { sum, .. } => Complex::new(sum.value(), T::zero()),
            StateKind::SqPlusGen2 { h1, h2 } => {
                let h1 = h1.value();
                Complex::new(h1 * h1 + h2.value(), T::zero())
            }
            StateKind::Reciprocal => Complex::new(T::one() / T::from_usize_lossy(n + 1), T::zero()),
            StateKind::DigammaDiff { sum, .. } => *sum,
            StateKind::Alternating(inner) => {
                if n.is_multiple_of(2) {
                    inner.value()
                } else {
                    -inner.value()
                }
            }
            StateKind::Combo(terms) => terms.iter().fold(Complex::zero(), |acc, (c, w)| acc + *c * w.value()),
        }
    }

    /// Move from n to n+1.
    pub fn advance(&mut self) {
        let n = self.n;
        match &mut self.kind {
            StateKind::Unit | StateKind::Reciprocal => {}
            StateKind::Harmonic { stride, offset, sum } => {
                let from = (*stride * n) as i64 + *offset;
                let to = (*stride * (n + 1)) as i64 + *offset;
                for k in (from + 1).max(1)..=to {
                    sum.add(T::one() / T::from_i64(k).expect("index representable"));
                }
            }
            StateKind::SqPlusGen2 { h1, h2 } => {
                let k = T::from_usize_lossy(n + 1);
                h1.add(k.recip());
                h2.add((k * k).recip());
            }
            StateKind::DigammaDiff { two_b, shifted, sum } => {
                let k = T::from_usize_lossy(n);
                *sum = *sum + (*two_b + k).inv() * T::lit(2.0) - (*shifted + k).inv();
            }
            StateKind::Alternating(inner) => inner.advance(),
            StateKind::Combo(terms) => terms.iter_mut().for_each(|(_, w)| w.advance()),
        }
        self.n += 1;
    }
}

/// Neumaier-compensated running sum; harmonic numbers are accumulated over
/// millions of terms on the unit circle, where plain addition drifts.
#[derive(Debug, Clone, Copy, Default)]
struct Compensated<T> {
    sum: T,
    carry: T,
}

impl<T: Real> Compensated<T> {
    fn add(&mut self, x: T) {
        let t = self.sum + x;
        self.carry = self.carry
            + if self.sum.abs() >= x.abs() {
                (self.sum - t) + x
            } else {
                (x - t) + self.sum
            };
        self.sum = t;
    }

    fn value(&self) -> T {
        self.sum + self.carry
    }
}
