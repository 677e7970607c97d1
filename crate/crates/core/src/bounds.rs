//! Leakage bounds for half-sample shifted sequences.
//!
//! A half-sample shift of `r` at half-bandwidth `W` is an integer shift of
//! the zero-stuffed sequence `r↑2` band-limited at `W/2`: odd samples of
//! `B_{W/2}(r↑2)` are the samples of `B_W^{1/2} r`. Expanding `r↑2` in the
//! DPSS basis of length `2N+1` and half-bandwidth `W/2` turns the infinite
//! tail of the unshifted upsampled sequence into the finite sum
//!
//! ```text
//! Σ_l |a_l / W|² λ_l (1 − λ_l),    a_l = Σ_n r[n] s_l[2n]
//! ```
//!
//! which bounds the tail of the shifted sequence outside `[−N/2, N/2]`
//! ([`tail_bound`]). At `W = 1/2` the even samples of `B_{1/4}(r↑2)` are
//! just `r`, which makes the relation exact over `[−N/2, N/2 + 1]` with the
//! `(2N+3, 1/4)` set ([`HalfSampleFamily::full_band_tail`]).

use num_complex::Complex64;

use crate::dpss::{compute_dpss, DpssParams, DpssSet};
use crate::error::{Error, Result};
use crate::fracshift::{shifted_sample, tail_energy_exact, ShiftSpec, TailWindow};
use crate::numeric::compensated_sum;
use crate::sequence::{check_support, Sequence};

/// Even-sample projections `a_l = Σ_{n=−N/2}^{N/2} r[n] s_l[2n]` onto a DPSS set.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    values: Vec<Complex64>,
    source: DpssParams,
}

impl CoeffVector {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn get(&self, l: usize) -> Complex64 {
        self.values[l]
    }

    pub fn source_params(&self) -> DpssParams {
        self.source
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Project `r` (support `[−N/2, N/2]`) onto the even samples of `set`.
/// The set must have length `2N+1` or `2N+3`.
pub fn dpss_coeffs(r: &Sequence, set: &DpssSet) -> Result<CoeffVector> {
    let n = r.n();
    let m = set.len();
    if m != 2 * n + 1 && m != 2 * n + 3 {
        return Err(Error::LengthMismatch {
            expected: format!("{} or {}", 2 * n + 1, 2 * n + 3),
            found: m,
        });
    }
    let values = (0..m)
        .map(|l| {
            let re = compensated_sum(r.iter().map(|(k, v)| v.re * set.sample(l, 2 * k)));
            let im = compensated_sum(r.iter().map(|(k, v)| v.im * set.sample(l, 2 * k)));
            Complex64::new(re, im)
        })
        .collect();
    Ok(CoeffVector {
        values,
        source: set.params(),
    })
}

/// A tail-energy bound or identity together with the exact tail it refers to.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound_value: f64,
    pub exact_value: Option<f64>,
    /// `bound_value − exact_value`.
    pub slack: Option<f64>,
    /// Per-member contributions; they sum to `bound_value`.
    pub components: Vec<f64>,
    pub coeffs: CoeffVector,
    pub window: TailWindow,
}

/// Agreement rule for identities between tail energies: relative `1e-8`
/// when the exact value is at least `1e-6`, absolute `1e-12` below that.
pub fn identity_holds(value: f64, exact: f64) -> bool {
    identity_holds_with(value, exact, IDENTITY_REL_TOL, IDENTITY_ABS_TOL)
}

pub const IDENTITY_REL_TOL: f64 = 1e-8;
pub const IDENTITY_ABS_TOL: f64 = 1e-12;
/// Exact values below this use the absolute tolerance.
pub const IDENTITY_REL_FLOOR: f64 = 1e-6;

pub fn identity_holds_with(value: f64, exact: f64, rel: f64, abs: f64) -> bool {
    let err = (value - exact).abs();
    if exact.abs() >= IDENTITY_REL_FLOOR {
        err <= rel * exact.abs()
    } else {
        err <= abs
    }
}

/// DPSS context `(2N+1, W/2)` for the general tail bound at fixed `(N, W)`.
#[derive(Debug, Clone)]
pub struct TailBoundContext {
    n: usize,
    half_bandwidth: f64,
    set: DpssSet,
}

impl TailBoundContext {
    pub fn new(n: usize, half_bandwidth: f64) -> Result<Self> {
        check_support(n)?;
        ShiftSpec::new(half_bandwidth, 0.5)?;
        let set = compute_dpss(&DpssParams::new(2 * n + 1, 0.5 * half_bandwidth)?)?;
        Ok(Self { n, half_bandwidth, set })
    }

    pub fn set(&self) -> &DpssSet {
        &self.set
    }

    /// Bound on the tail of `B_W^{1/2} r` outside `[−N/2, N/2]`, plus the
    /// exact tail for comparison.
    pub fn bound(&self, r: &Sequence) -> Result<BoundReport> {
        if r.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: format!("sequence with N = {}", self.n),
                found: r.n(),
            });
        }
        let w = self.half_bandwidth;
        let coeffs = dpss_coeffs(r, &self.set)?;
        let components: Vec<f64> = coeffs
            .values()
            .iter()
            .enumerate()
            .map(|(l, a)| {
                let lam = self.set.eigenvalue(l);
                (a.norm_sqr() / (w * w)) * lam * self.set.complement(l)
            })
            .collect();
        let bound_value = compensated_sum(components.iter().copied());
        let window = TailWindow::centered(self.n);
        let exact = tail_energy_exact(r, &ShiftSpec::new(w, 0.5)?, &window)?.value;
        Ok(BoundReport {
            bound_value,
            exact_value: Some(exact),
            slack: Some(bound_value - exact),
            components,
            coeffs,
            window,
        })
    }
}

/// Upper bound on the tail energy of `B_W^{1/2} r` outside `[−N/2, N/2]`.
pub fn tail_bound(r: &Sequence, half_bandwidth: f64) -> Result<BoundReport> {
    TailBoundContext::new(r.n(), half_bandwidth)?.bound(r)
}

/// The `(2N+3, 1/4)` DPSS set and everything computed from it: the
/// full-band half-sample tail identity, concentration, and the even-sample
/// basis. Build once per `N` and reuse across sequences.
#[derive(Debug, Clone)]
pub struct HalfSampleFamily {
    n: usize,
    set: DpssSet,
}

impl HalfSampleFamily {
    pub fn new(n: usize) -> Result<Self> {
        let set = compute_dpss(&DpssParams::half_sample_family(n)?)?;
        Ok(Self { n, set })
    }

    /// Wrap an existing `(2N+3, 0.25)` set.
    pub fn from_set(set: DpssSet) -> Result<Self> {
        let params = set.params();
        let n = params.family_order().ok_or(Error::FamilyMismatch {
            length: params.length(),
            half_bandwidth: params.half_bandwidth(),
        })?;
        Ok(Self { n, set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &DpssSet {
        &self.set
    }

    /// `λ̄_l`.
    pub fn eigenvalue(&self, l: usize) -> f64 {
        self.set.eigenvalue(l)
    }

    /// `1 − λ̄_l`, read off the paired member `λ̄_{2N+2−l}`.
    pub fn complement(&self, l: usize) -> f64 {
        self.set.complement(l)
    }

    pub(crate) fn check(&self, r: &Sequence) -> Result<()> {
        if r.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: format!("sequence with N = {}", self.n),
                found: r.n(),
            });
        }
        Ok(())
    }

    /// `ā_l = Σ_n r[n] s_l[2n]` for all `2N+3` members.
    pub fn coeffs(&self, r: &Sequence) -> Result<CoeffVector> {
        self.check(r)?;
        dpss_coeffs(r, &self.set)
    }

    /// Exact tail of `B_{1/2}^{1/2} r` outside `[−N/2, N/2 + 1]` as
    /// `8 Σ_{l=0}^{N} |ā_l|² λ̄_l (1 − λ̄_l)`, with the directly computed
    /// tail alongside.
    pub fn full_band_tail(&self, r: &Sequence) -> Result<BoundReport> {
        let coeffs = self.coeffs(r)?;
        let components: Vec<f64> = (0..=self.n)
            .map(|l| 8.0 * coeffs.get(l).norm_sqr() * self.eigenvalue(l) * self.complement(l))
            .collect();
        let bound_value = compensated_sum(components.iter().copied());
        let window = TailWindow::half_sample(self.n);
        let exact = tail_energy_exact(r, &ShiftSpec::half_sample(), &window)?.value;
        Ok(BoundReport {
            bound_value,
            exact_value: Some(exact),
            slack: Some(bound_value - exact),
            components,
            coeffs,
            window,
        })
    }
}

/// Full-band half-sample tail identity for a single sequence.
pub fn full_band_tail(r: &Sequence) -> Result<BoundReport> {
    HalfSampleFamily::new(r.n())?.full_band_tail(r)
}

/// How the correction term of [`upsampled_tail_bound_with`] is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorrectionForm {
    /// `Σ_{i=1,2} |{B_{W/2}(r↑2)}[−2l−i]|²`: the squared interpolated samples
    /// that the bound actually drops.
    #[default]
    Interpolated,
    /// `Σ_{i=1,2} Σ_q |r[q]|² sinc²(2W(−l − i/2 − q))`, the sum of squares
    /// instead of the square of the sum. Kept for comparison only; it is not
    /// a valid correction in general.
    TermwiseSquares,
}

/// Both sides of the upsampled tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpsampledTailBound {
    /// Exact tail of `B_W^{1/2} r` outside `[−l, m]`.
    pub shifted_tail: f64,
    /// Exact tail of `B_{W/2}(r↑2)` outside `[−2l, 2m]`, minus the correction.
    pub rhs: f64,
    /// The correction term in the requested form.
    pub correction: f64,
}

impl UpsampledTailBound {
    pub fn slack(&self) -> f64 {
        self.rhs - self.shifted_tail
    }
}

/// `Ē_{−l,m}(B_W^{1/2} r) <= Ē_{−2l,2m}(B_{W/2}(r↑2)) − A`.
pub fn upsampled_tail_bound(r: &Sequence, half_bandwidth: f64, window: &TailWindow) -> Result<UpsampledTailBound> {
    upsampled_tail_bound_with(r, half_bandwidth, window, CorrectionForm::Interpolated)
}

pub fn upsampled_tail_bound_with(
    r: &Sequence,
    half_bandwidth: f64,
    window: &TailWindow,
    form: CorrectionForm,
) -> Result<UpsampledTailBound> {
    let shifted = ShiftSpec::new(half_bandwidth, 0.5)?;
    let up = r.upsample2();
    let up_spec = ShiftSpec::unshifted(0.5 * half_bandwidth)?;
    let up_window = TailWindow::new(2 * window.left, 2 * window.right);

    let shifted_tail = tail_energy_exact(r, &shifted, window)?.value;
    let up_tail = tail_energy_exact(&up, &up_spec, &up_window)?.value;
    let l = window.left as isize;
    let correction = match form {
        CorrectionForm::Interpolated => compensated_sum(
            [1, 2]
                .iter()
                .map(|i| shifted_sample(&up, &up_spec, -2 * l - i).norm_sqr()),
        ),
        CorrectionForm::TermwiseSquares => {
            let two_w = 2.0 * half_bandwidth;
            compensated_sum([1.0, 2.0].iter().flat_map(|&i| {
                r.iter().map(move |(q, v)| {
                    let k = crate::numeric::sinc(two_w * (-(l as f64) - i / 2.0 - q as f64));
                    v.norm_sqr() * k * k
                })
            }))
        }
    };
    Ok(UpsampledTailBound {
        shifted_tail,
        rhs: up_tail - correction,
        correction,
    })
}

/// Both sides of the full-band identity
/// `Ē_{−l,m}(B_{1/2}^{1/2} r) = Ē_{−2l−1,2m−1}(B_{1/4}(r↑2))`,
/// valid for `l >= N/2`, `m > N/2`.
pub fn upsampled_tail_identity(r: &Sequence, window: &TailWindow) -> Result<(f64, f64)> {
    let (l, m, h) = (window.left, window.right, r.n_half());
    if l < h || m <= h {
        return Err(Error::InvalidWindow {
            left: l,
            right: m,
            n: r.n(),
            reason: "needs left >= N/2 and right > N/2",
        });
    }
    let lhs = tail_energy_exact(r, &ShiftSpec::half_sample(), window)?.value;
    let rhs = tail_energy_exact(
        &r.upsample2(),
        &ShiftSpec::unshifted(0.25)?,
        &TailWindow::new(2 * l + 1, 2 * m - 1),
    )?
    .value;
    Ok((lhs, rhs))
}
