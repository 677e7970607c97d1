//! The fractional shift operator
//!
//! ```text
//! {B_W^τ r}[n] = Σ_q r[q] · sinc(2W(n − τ − q))
//! ```
//!
//! together with exact and brute-force evaluations of the energy that the
//! shifted sequence leaks outside a window.
//!
//! For `W <= 1/2` the shifted sequence is a Nyquist-rate sampling of a
//! band-limited function, so its total energy is the quadratic form
//!
//! ```text
//! E = 1/(2W) · Σ_{q,q'} r[q] r̄[q'] sinc(2W(q − q'))
//! ```
//!
//! which does not depend on `τ`. The tail outside `[−l, m]` is `E` minus the
//! finitely many window samples. [`tail_energy_truncated`] computes the same
//! quantity from samples alone and serves as an independent check.

use std::f64::consts::PI;
use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{
    compensated_sum, cos_pi, reciprocal_product_tail, sin_pi, sinc, CompensatedSum, ASYMPTOTIC_MIN_ARG,
};
use crate::sequence::Sequence;

/// Half-bandwidth `W ∈ (0, 1/2]` and real shift `τ` of `B_W^τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftSpec {
    half_bandwidth: f64,
    shift: f64,
}

impl ShiftSpec {
    pub fn new(half_bandwidth: f64, shift: f64) -> Result<Self> {
        if !(half_bandwidth > 0.0 && half_bandwidth <= 0.5) {
            return Err(Error::ShiftBandwidthOutOfRange(half_bandwidth));
        }
        if !shift.is_finite() {
            return Err(Error::NonFiniteShift(shift));
        }
        Ok(Self { half_bandwidth, shift })
    }

    /// Band-limiting without shift, `B_W`.
    pub fn unshifted(half_bandwidth: f64) -> Result<Self> {
        Self::new(half_bandwidth, 0.0)
    }

    /// Full-band half-sample shift `B_{1/2}^{1/2}`.
    pub fn half_sample() -> Self {
        Self {
            half_bandwidth: 0.5,
            shift: 0.5,
        }
    }

    pub fn half_bandwidth(&self) -> f64 {
        self.half_bandwidth
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }
}

/// Kept region `[−left, right]`; everything outside is tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailWindow {
    pub left: usize,
    pub right: usize,
}

impl TailWindow {
    pub fn new(left: usize, right: usize) -> Self {
        Self { left, right }
    }

    /// `[−N/2, N/2]`, the window of the general tail bound.
    pub fn centered(n: usize) -> Self {
        Self::new(n / 2, n / 2)
    }

    /// `[−N/2, N/2 + 1]`, the window of the half-sample equality.
    pub fn half_sample(n: usize) -> Self {
        Self::new(n / 2, n / 2 + 1)
    }

    pub fn range(&self) -> RangeInclusive<isize> {
        -(self.left as isize)..=self.right as isize
    }

    pub fn contains(&self, n: isize) -> bool {
        self.range().contains(&n)
    }
}

/// One output sample `{B_W^τ r}[n]`.
pub fn shifted_sample(r: &Sequence, spec: &ShiftSpec, n: isize) -> Complex64 {
    let two_w = 2.0 * spec.half_bandwidth;
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for (q, v) in r.iter() {
        let k = sinc(two_w * ((n - q) as f64 - spec.shift));
        re.add(v.re * k);
        im.add(v.im * k);
    }
    Complex64::new(re.value(), im.value())
}

/// Samples of `B_W^τ r` over `range`.
pub fn apply_shift(r: &Sequence, spec: &ShiftSpec, range: RangeInclusive<isize>) -> Vec<Complex64> {
    range.map(|n| shifted_sample(r, spec, n)).collect()
}

/// Total energy `Σ_n |{B_W^τ r}[n]|²`, exact, via the band-limited Gram form.
pub fn total_energy(r: &Sequence, spec: &ShiftSpec) -> f64 {
    let two_w = 2.0 * spec.half_bandwidth;
    let vals = r.values();
    let mut acc = CompensatedSum::new();
    for (i, a) in vals.iter().enumerate() {
        acc.add(a.norm_sqr());
        for (j, b) in vals.iter().enumerate().skip(i + 1) {
            let k = sinc(two_w * (j - i) as f64);
            acc.add(2.0 * (a * b.conj()).re * k);
        }
    }
    acc.value() / two_w
}

/// `Σ_{n ∈ window} |{B_W^τ r}[n]|²`.
pub fn window_energy(r: &Sequence, spec: &ShiftSpec, window: &TailWindow) -> f64 {
    compensated_sum(window.range().map(|n| shifted_sample(r, spec, n).norm_sqr()))
}

/// Result of [`tail_energy_exact`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEnergy {
    pub value: f64,
    /// Set when a slightly negative rounding result was clamped to zero.
    pub clamped: bool,
}

/// Negative tails down to `−NEGATIVE_TAIL_TOL · max(1, E)` are rounding and
/// get clamped to zero; anything lower is an error.
pub const NEGATIVE_TAIL_TOL: f64 = 1e-12;

/// Tail energy outside `window`: total energy minus window energy.
pub fn tail_energy_exact(r: &Sequence, spec: &ShiftSpec, window: &TailWindow) -> Result<TailEnergy> {
    let total = total_energy(r, spec);
    let value = total - window_energy(r, spec, window);
    if value >= 0.0 {
        return Ok(TailEnergy { value, clamped: false });
    }
    if value >= -NEGATIVE_TAIL_TOL * total.max(1.0) {
        Ok(TailEnergy {
            value: 0.0,
            clamped: true,
        })
    } else {
        Err(Error::NegativeTail { value })
    }
}

/// Result of [`tail_energy_truncated`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedTail {
    pub value: f64,
    /// Final horizon `H`: samples with `|n| <= H` were summed explicitly.
    pub horizon: u64,
    /// Bound on the error of the remainder estimate for `|n| > H`.
    pub remainder_bound: f64,
}

pub const INITIAL_HORIZON: u64 = 1024;
pub const MAX_HORIZON: u64 = 1 << 26;

/// Tail energy from explicit samples.
///
/// Sums `|{B_W^τ r}[n]|²` over `|n| <= H` outside the window and adds the
/// contribution of `|n| > H`. Beyond the support every sample has the form
///
/// ```text
/// Σ_q r[q] sin(2πW(x − q)) / (2πW(x − q)),    x = n − τ
/// ```
///
/// and the squared magnitude splits into a part without oscillation in `n`,
/// summed in closed form with digamma differences, and a part carrying the
/// factor `cos(2πW(2x − q − q'))`. At `W = 1/2` that factor is constant in
/// `n` and is summed in closed form too; otherwise Abel summation bounds it
/// by `h(H+1)/|sin 2πW|` per pair, with `h` the decreasing rational envelope.
///
/// `H` doubles from 1024 until the bound and the change from the previous
/// horizon are both below `tol`.
pub fn tail_energy_truncated(r: &Sequence, spec: &ShiftSpec, window: &TailWindow, tol: f64) -> Result<TruncatedTail> {
    tail_energy_truncated_with_limit(r, spec, window, tol, MAX_HORIZON)
}

/// [`tail_energy_truncated`] with an explicit horizon cap.
pub fn tail_energy_truncated_with_limit(
    r: &Sequence,
    spec: &ShiftSpec,
    window: &TailWindow,
    tol: f64,
    max_horizon: u64,
) -> Result<TruncatedTail> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let tau = spec.shift;
    // Remainder terms need every (n − τ − q), |n| > H, at least ASYMPTOTIC_MIN_ARG.
    let min_horizon = (window.left.max(window.right) + r.n_half()) as f64 + tau.abs() + ASYMPTOTIC_MIN_ARG;
    let mut horizon = INITIAL_HORIZON;
    while (horizon as f64) < min_horizon {
        horizon *= 2;
        if horizon > max_horizon {
            return Err(Error::HorizonExceeded { horizon });
        }
    }

    let far = FarField::new(r, spec);
    let mut direct = CompensatedSum::new();
    let add_range = |lo: i64, hi: i64, acc: &mut CompensatedSum| {
        for n in lo..=hi {
            let n = n as isize;
            if !window.contains(n) {
                acc.add(far.sample(r, spec, n).norm_sqr());
            }
        }
    };
    add_range(-(horizon as i64), horizon as i64, &mut direct);

    let mut previous: Option<f64> = None;
    loop {
        let (rest, bound) = remainder_beyond(r, spec, horizon);
        let value = direct.value() + rest;
        let settled = previous.is_none_or(|p| (value - p).abs() < tol);
        if bound < tol && settled {
            return Ok(TruncatedTail {
                value,
                horizon,
                remainder_bound: bound,
            });
        }
        if horizon >= max_horizon {
            return Err(Error::HorizonExceeded { horizon });
        }
        let h = horizon as i64;
        add_range(h + 1, 2 * h, &mut direct);
        add_range(-2 * h, -h - 1, &mut direct);
        horizon *= 2;
        previous = Some(value);
    }
}

/// Sample evaluation away from the support, where
/// `sin(2πW(x − q)) = sin(2πWx)cos(2πWq) − cos(2πWx)sin(2πWq)` needs two
/// trigonometric calls per sample instead of one per support point.
struct FarField {
    two_w: f64,
    phases: Vec<(f64, f64)>,
    reach: f64,
}

impl FarField {
    fn new(r: &Sequence, spec: &ShiftSpec) -> Self {
        let two_w = 2.0 * spec.half_bandwidth;
        let phases = r
            .iter()
            .map(|(q, _)| (cos_pi(two_w * q as f64), sin_pi(two_w * q as f64)))
            .collect();
        FarField {
            two_w,
            phases,
            reach: r.n_half() as f64 + 1.0,
        }
    }

    fn sample(&self, r: &Sequence, spec: &ShiftSpec, n: isize) -> Complex64 {
        let x = n as f64 - spec.shift;
        if x.abs() <= self.reach {
            return shifted_sample(r, spec, n);
        }
        let (s, c) = (sin_pi(self.two_w * x), cos_pi(self.two_w * x));
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for ((q, v), (cq, sq)) in r.iter().zip(&self.phases) {
            let k = (s * cq - c * sq) / (PI * self.two_w * (x - q as f64));
            re.add(v.re * k);
            im.add(v.im * k);
        }
        Complex64::new(re.value(), im.value())
    }
}

/// Contribution of `|n| > horizon` and a bound on its error.
fn remainder_beyond(r: &Sequence, spec: &ShiftSpec, horizon: u64) -> (f64, f64) {
    let w = spec.half_bandwidth;
    let tau = spec.shift;
    let start = horizon as f64 + 1.0;
    let full_band = w == 0.5;
    let coef = 1.0 / (2.0 * (2.0 * PI * w).powi(2));

    let mut smooth = CompensatedSum::new();
    let mut envelope = CompensatedSum::new();
    for (q, a) in r.iter() {
        for (p, b) in r.iter() {
            let cross = (a * b.conj()).re;
            let (qf, pf) = (q as f64, p as f64);
            let right = reciprocal_product_tail(start, tau + qf, tau + pf);
            let left = reciprocal_product_tail(start, -tau - qf, -tau - pf);
            let mut factor = cos_pi(2.0 * w * (qf - pf));
            if full_band {
                factor -= cos_pi(2.0 * tau + qf + pf);
            } else {
                let h_right = 1.0 / ((start - tau - qf) * (start - tau - pf));
                let h_left = 1.0 / ((start + tau + qf) * (start + tau + pf));
                envelope.add(a.norm() * b.norm() * (h_right + h_left));
            }
            smooth.add(cross * factor * (right + left));
        }
    }
    let bound = if full_band {
        0.0
    } else {
        coef * envelope.value() / sin_pi(2.0 * w).abs()
    };
    (coef * smooth.value(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAC_2_PI: f64 = std::f64::consts::FRAC_2_PI;

    #[test]
    fn spec_validation() {
        assert!(ShiftSpec::new(0.5, 0.3).is_ok());
        assert!(matches!(
            ShiftSpec::new(0.51, 0.0),
            Err(Error::ShiftBandwidthOutOfRange(_))
        ));
        assert!(matches!(
            ShiftSpec::new(0.0, 0.0),
            Err(Error::ShiftBandwidthOutOfRange(_))
        ));
        assert!(matches!(
            ShiftSpec::new(0.2, f64::INFINITY),
            Err(Error::NonFiniteShift(_))
        ));
    }

    #[test]
    fn full_band_unshifted_is_identity() {
        let r = Sequence::new(vec![
            Complex64::new(0.3, -1.0),
            Complex64::new(2.0, 0.5),
            Complex64::new(-1.5, 0.25),
        ])
        .unwrap();
        let out = apply_shift(&r, &ShiftSpec::unshifted(0.5).unwrap(), -4..=4);
        for (n, v) in (-4..=4).zip(out) {
            assert_eq!(v, r.get(n), "n = {n}");
        }
    }

    #[test]
    fn impulse_half_sample_values() {
        let r = Sequence::impulse(2).unwrap();
        let out = apply_shift(&r, &ShiftSpec::half_sample(), 0..=1);
        assert!((out[0].re - FRAC_2_PI).abs() < 1e-15);
        assert!((out[1].re - FRAC_2_PI).abs() < 1e-15);
    }

    #[test]
    fn zero_sequence_has_no_tail() {
        let r = Sequence::zeros(4).unwrap();
        let spec = ShiftSpec::new(0.3, 0.5).unwrap();
        let exact = tail_energy_exact(&r, &spec, &TailWindow::centered(4)).unwrap();
        assert_eq!(
            exact,
            TailEnergy {
                value: 0.0,
                clamped: false
            }
        );
        let trunc = tail_energy_truncated(&r, &spec, &TailWindow::centered(4), 1e-10).unwrap();
        assert_eq!((trunc.value, trunc.horizon), (0.0, 1024));
    }

    #[test]
    fn impulse_tail_matches_closed_form() {
        // window keeps sinc(∓0.5) = 2/π, the rest of the unit energy leaks
        let r = Sequence::impulse(2).unwrap();
        let spec = ShiftSpec::half_sample();
        let window = TailWindow::new(0, 1);
        let expected = 1.0 - 8.0 / (PI * PI);
        let exact = tail_energy_exact(&r, &spec, &window).unwrap();
        assert!((exact.value - expected).abs() < 1e-15);
        let trunc = tail_energy_truncated(&r, &spec, &window, 1e-10).unwrap();
        assert!((trunc.value - expected).abs() < 1e-9, "{}", trunc.value);
        assert!((expected - 0.189430).abs() < 1e-6);
    }

    #[test]
    fn truncated_oracle_rejects_bad_tolerance() {
        let r = Sequence::impulse(2).unwrap();
        let spec = ShiftSpec::half_sample();
        assert!(matches!(
            tail_energy_truncated(&r, &spec, &TailWindow::centered(2), 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn truncated_oracle_reports_horizon_exhaustion() {
        let r = Sequence::from_real(&[1.0, -0.5, 0.25]).unwrap();
        let spec = ShiftSpec::new(0.05, 0.5).unwrap();
        assert!(matches!(
            tail_energy_truncated_with_limit(&r, &spec, &TailWindow::centered(2), 1e-20, 4096),
            Err(Error::HorizonExceeded { horizon: 4096 })
        ));
    }

    #[test]
    fn clamps_rounding_negatives() {
        // nearly all energy of a full-band unshifted impulse sits in the window
        let r = Sequence::impulse(2).unwrap();
        let t = tail_energy_exact(&r, &ShiftSpec::unshifted(0.5).unwrap(), &TailWindow::centered(2)).unwrap();
        assert_eq!(t.value, 0.0);
    }
}
