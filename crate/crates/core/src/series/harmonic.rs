use crate::scalar::Real;

/// H_n = 1 + 1/2 + … + 1/n, with H_0 = 0.
pub fn harmonic<T: Real>(n: usize) -> T {
    (1..=n).fold(T::zero(), |acc, k| acc + T::one() / T::from_usize_lossy(k))
}

/// H_n^{(r)} = Σ_{k=1}^{n} k^{-r}.
pub fn generalized_harmonic<T: Real>(n: usize, r: u32) -> T {
    assert!(r >= 1, "generalized harmonic order must be at least 1");
    (1..=n).fold(T::zero(), |acc, k| acc + T::from_usize_lossy(k).powi(-(r as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(harmonic::<f64>(0), 0.0);
        assert_eq!(harmonic::<f64>(1), 1.0);
        assert!((harmonic::<f64>(4) - 25.0 / 12.0).abs() < 1e-15);
        assert!((generalized_harmonic::<f64>(3, 2) - 49.0 / 36.0).abs() < 1e-15);
        assert_eq!(generalized_harmonic::<f64>(0, 3), 0.0);
    }

    #[test]
    fn grows_like_log() {
        let euler_gamma = 0.577_215_664_901_532_9;
        let n = 100_000;
        let h: f64 = harmonic(n);
        assert!((h - (n as f64).ln() - euler_gamma - 0.5 / n as f64).abs() < 1e-10);
    }
}
