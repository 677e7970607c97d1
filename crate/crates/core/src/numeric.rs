//! Scalar helpers: exact-at-integers trigonometry, the normalized sinc,
//! compensated summation and large-argument polygamma differences.

use std::f64::consts::PI;

/// `sin(πx)` with exact zeros at the integers and exact `±1` at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // fmod is exact; the corrections below are exact by Sterbenz.
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// `cos(πx)` with exact zeros at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = (x % 2.0).abs();
    if r > 1.0 {
        r = 2.0 - r;
    }
    // cos(πr) = sin(π(1/2 - r)) for r in [0, 1]
    sin_pi(0.5 - r)
}

/// Normalized sinc: `sin(πx)/(πx)`, `sinc(0) = 1`.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        sin_pi(x) / (PI * x)
    }
}

/// Neumaier-compensated running sum. Summation order is the caller's order,
/// so results are reproducible bit for bit.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator of `f64`.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

// Bernoulli numbers B_2 .. B_12.
const BERNOULLI: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// Smallest argument for which the asymptotic series below are used.
/// Truncation error at this size is far below `f64` resolution.
pub const ASYMPTOTIC_MIN_ARG: f64 = 64.0;

/// `ψ'(z)` (trigamma) for `z >= ASYMPTOTIC_MIN_ARG`.
pub fn trigamma_large(z: f64) -> f64 {
    debug_assert!(z >= ASYMPTOTIC_MIN_ARG);
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv2 * inv; // z^-(2k+1)
    for b in BERNOULLI {
        series += b * pow;
        pow *= inv2;
    }
    inv + 0.5 * inv2 + series
}

/// `ψ(z + d) - ψ(z)` for `z, z + d >= ASYMPTOTIC_MIN_ARG`, evaluated without
/// subtracting two large digamma values.
pub fn digamma_diff_large(z: f64, d: f64) -> f64 {
    let w = z + d;
    debug_assert!(z >= ASYMPTOTIC_MIN_ARG && w >= ASYMPTOTIC_MIN_ARG);
    // ψ(z) ~ ln z - 1/(2z) - Σ B_2k / (2k z^2k)
    let mut acc = (d / z).ln_1p() + 0.5 * d / (z * w);
    let (iz2, iw2) = (1.0 / (z * z), 1.0 / (w * w));
    let (mut pz, mut pw) = (iz2, iw2);
    for (k, b) in BERNOULLI.iter().enumerate() {
        let two_k = 2.0 * (k as f64 + 1.0);
        acc -= b / two_k * (pw - pz);
        pz *= iz2;
        pw *= iw2;
    }
    acc
}

/// `Σ_{n >= start} 1 / ((n - a)(n - b))` for `start - max(a, b) >= ASYMPTOTIC_MIN_ARG`.
pub fn reciprocal_product_tail(start: f64, a: f64, b: f64) -> f64 {
    let (za, zb) = (start - a, start - b);
    if a == b {
        trigamma_large(za)
    } else {
        // 1/((n-a)(n-b)) = (1/(n-a) - 1/(n-b)) / (a - b), and the bracket
        // telescopes to ψ(zb) - ψ(za).
        digamma_diff_large(za, zb - za) / (a - b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_pi_exact_points() {
        for k in -50..=50 {
            assert_eq!(sin_pi(k as f64), 0.0, "k = {k}");
        }
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(sin_pi(1.5), -1.0);
        assert_eq!(cos_pi(0.5), 0.0);
        assert_eq!(cos_pi(1.0), -1.0);
        assert_eq!(cos_pi(-2.0), 1.0);
    }

    #[test]
    fn sin_pi_matches_libm() {
        for i in 0..1000 {
            let x = -7.3 + 0.0147 * i as f64;
            assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-14, "x = {x}");
            assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn sinc_half_sample() {
        assert_eq!(sinc(0.0), 1.0);
        assert!((sinc(0.5) - 2.0 / PI).abs() < 1e-16);
        assert!((sinc(-0.5) - 2.0 / PI).abs() < 1e-16);
        assert_eq!(sinc(3.0), 0.0);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let xs = [1.0, 1e-16, 1e-16, -1.0];
        assert_eq!(compensated_sum(xs), 2e-16);
    }

    #[test]
    fn reciprocal_tail_against_direct_sum() {
        // direct summation to a large cutoff plus the integral estimate of the rest
        let (start, a, b) = (100.0, 0.5, -3.5);
        let cutoff = 2_000_000u64;
        let mut acc = CompensatedSum::new();
        for n in (start as u64)..cutoff {
            let n = n as f64;
            acc.add(1.0 / ((n - a) * (n - b)));
        }
        // Σ_{n >= cutoff} ~ 1/(cutoff - (a+b)/2 - 1/2), accurate to O(cutoff^-3)
        let rest = 1.0 / (cutoff as f64 - 0.5 * (a + b) - 0.5);
        let direct = acc.value() + rest;
        let closed = reciprocal_product_tail(start, a, b);
        assert!((direct - closed).abs() < 1e-15, "{direct} vs {closed}");

        let same = reciprocal_product_tail(start, 0.25, 0.25);
        let mut acc = CompensatedSum::new();
        for n in (start as u64)..cutoff {
            let n = n as f64 - 0.25;
            acc.add(1.0 / (n * n));
        }
        let direct = acc.value() + 1.0 / (cutoff as f64 - 0.25 - 0.5);
        assert!((direct - same).abs() < 1e-15, "{direct} vs {same}");
    }
}
