//! Sequence acceleration for unit-argument series.
//!
//! * [`wynn_epsilon`]: Wynn's ε-algorithm on a list of partial sums. Used on
//!   consecutive partial sums of oscillating series (ratio limit on the unit
//!   circle, other than +1).
//! * [`richardson_known_basis`]: for series whose terms behave like
//!   n^σ·(log n)^m with σ known, the partial sums sampled at N = 2^k satisfy
//!   S_N = S + Σ_j Σ_m c_{jm} N^{σ+1−j} (log N)^m + …; the limit S is
//!   recovered by solving for the unknown c_{jm} exactly.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Real};

/// Maximum ε-table column.
pub const WYNN_MAX_DEPTH: usize = 20;

/// Minimum number of partial sums accepted by [`wynn_epsilon`].
pub const WYNN_MIN_LEN: usize = 5;

fn tiny<T: Real>() -> T {
    T::lit(1e-300).max(T::min_positive_value())
}

/// Highest even-column entry of the ε-table built from `partial_sums`
/// (column depth capped at [`WYNN_MAX_DEPTH`]).
///
/// A vanishing difference between two even-column entries means the
/// sequence has already converged and that entry is returned. A vanishing
/// difference in an odd column, or any non-finite entry, is a breakdown.
pub fn wynn_epsilon<T: Real>(partial_sums: &[Complex<T>]) -> Result<Complex<T>> {
    if partial_sums.len() < WYNN_MIN_LEN {
        return Err(Error::Domain(format!(
            "wynn_epsilon needs at least {WYNN_MIN_LEN} partial sums, got {}",
            partial_sums.len()
        )));
    }
    let n = partial_sums.len();
    let mut previous: Vec<Complex<T>> = vec![Complex::zero(); n + 1];
    let mut current: Vec<Complex<T>> = partial_sums.to_vec();
    let mut best = *partial_sums.last().expect("non-empty");

    for column in 1..=WYNN_MAX_DEPTH.min(n - 1) {
        let mut next = Vec::with_capacity(current.len() - 1);
        for i in 0..current.len() - 1 {
            let diff = current[i + 1] - current[i];
            if diff.norm() < tiny::<T>() {
                // `current` is column `column - 1`
                if (column - 1) % 2 == 0 {
                    return Ok(current[i + 1]);
                }
                return Err(Error::AccelerationBreakdown(format!(
                    "vanishing difference in odd column {}",
                    column - 1
                )));
            }
            let entry = previous[i + 1] + diff.inv();
            if !is_finite(entry) {
                return Err(Error::AccelerationBreakdown(format!(
                    "non-finite entry in column {column}"
                )));
            }
            next.push(entry);
        }
        previous = current;
        current = next;
        if column % 2 == 0 {
            best = *current.last().expect("column is non-empty");
        }
    }
    Ok(best)
}

/// Number of unknowns (limit plus coefficients) for a log degree `m` fit.
pub fn richardson_unknowns(log_degree: usize) -> usize {
    1 + (richardson_orders(log_degree) + 1) * (log_degree + 1)
}

fn richardson_orders(log_degree: usize) -> usize {
    match log_degree {
        0 => 5,
        1 => 3,
        _ => 2,
    }
}

/// Limit of partial sums `samples[i]` taken at `sizes[i]` terms, assuming
/// S_N − S = Σ_{j≤J} Σ_{m≤deg} c_{jm} N^{σ+1−j} (ln N)^m.
///
/// `samples.len()` must equal [`richardson_unknowns`]`(log_degree)`.
pub fn richardson_known_basis<T: Real>(
    samples: &[Complex<T>],
    sizes: &[usize],
    exponent: Complex<T>,
    log_degree: usize,
) -> Result<Complex<T>> {
    let unknowns = richardson_unknowns(log_degree);
    if samples.len() != unknowns || sizes.len() != unknowns {
        return Err(Error::Domain(format!(
            "richardson fit needs exactly {unknowns} samples, got {}",
            samples.len()
        )));
    }
    let orders = richardson_orders(log_degree);
    let mut matrix: Vec<Vec<Complex<T>>> = sizes
        .iter()
        .map(|&size| {
            let ln_n = T::from_usize_lossy(size).ln();
            let mut row = vec![Complex::new(T::one(), T::zero())];
            for j in 0..=orders {
                let power = ((exponent + T::one() - T::from_usize_lossy(j)) * ln_n).exp();
                for m in 0..=log_degree {
                    row.push(power * ln_n.powi(m as i32));
                }
            }
            row
        })
        .collect();

    // column equilibration
    let mut scales = vec![T::zero(); unknowns];
    for row in &matrix {
        for (s, v) in scales.iter_mut().zip(row) {
            *s = s.max(v.norm());
        }
    }
    for row in &mut matrix {
        for (v, s) in row.iter_mut().zip(&scales) {
            if *s > T::zero() {
                *v = *v / *s;
            }
        }
    }
    let solution = solve_dense(matrix, samples.to_vec())
        .ok_or_else(|| Error::AccelerationBreakdown("singular extrapolation system".into()))?;
    let limit = solution[0] / scales[0];
    if !is_finite(limit) {
        return Err(Error::AccelerationBreakdown("non-finite extrapolated limit".into()));
    }
    Ok(limit)
}

/// Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
fn solve_dense<T: Real>(mut a: Vec<Vec<Complex<T>>>, mut b: Vec<Complex<T>>) -> Option<Vec<Complex<T>>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].norm().partial_cmp(&a[j][col].norm()).unwrap())?;
        if a[pivot][col].norm() <= T::epsilon() * T::lit(1e-3) {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor.is_zero() {
                continue;
            }
            for k in col..n {
                let delta = factor * a[col][k];
                a[row][k] = a[row][k] - delta;
            }
            let delta = factor * b[col];
            b[row] = b[row] - delta;
        }
    }
    let mut x = vec![Complex::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc = acc - a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}
