//! Seeded random test sequences.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::sequence::Sequence;

/// Complex Gaussian sequence on `[−N/2, N/2]`, normalized to unit energy.
///
/// # Panics
/// If `n` is odd or zero.
pub fn unit_complex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Sequence {
    let values = (0..=n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    normalize(values)
}

/// Real Gaussian sequence on `[−N/2, N/2]`, normalized to unit energy.
pub fn unit_real<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Sequence {
    let values = (0..=n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), 0.0))
        .collect();
    normalize(values)
}

fn normalize(values: Vec<Complex64>) -> Sequence {
    Sequence::new(values)
        .and_then(|s| s.normalized())
        .expect("support parameter must be even and positive")
}
