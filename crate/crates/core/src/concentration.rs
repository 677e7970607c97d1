//! Energy concentration after a full-band half-sample shift.
//!
//! For a unit-energy `r` on `[−N/2, N/2]` the shifted sequence
//! `B_{1/2}^{1/2} r` has unit total energy, and its concentration is the
//! fraction that stays inside `[−N/2, N/2 + 1]`. With `ā_l` the even-sample
//! projections onto the `(2N+3, 1/4)` DPSS set and `λ̄_p = λ̄_{2N+2−l}` the
//! paired eigenvalue (`λ̄_l + λ̄_p = 1`):
//!
//! ```text
//! tail   = 8 Σ_{l=0}^{N} |ā_l|² λ̄_l λ̄_p
//! window = 4 Σ_{l=0}^{N} |ā_l|² (λ̄_l² + λ̄_p²) − 1
//! ```
//!
//! Since `Σ_{l=0}^{N} |ā_l|² = 1/2`, the window energy is
//! `1 − tail`, and the concentration is maximized by putting all weight on
//! `l = 0`: `r* = √2·s_0[2n]`, with concentration `1 − 4 λ̄_0 λ̄_{2N+2}`.
//!
//! The report also carries the compact closed form
//! `1 / (1 + Σ|ā_l|²λ̄_l(1−λ̄_l) / (Σλ̄_l²|ā_l|² − 1/8))`. It treats the
//! window sum as if `λ̄_l²` were symmetric under pairing, and agrees with
//! the direct ratio only when `Σ_{l=0}^{N} λ̄_l|ā_l|² = 1/4`; it is exposed
//! as [`ConcentrationReport::formula_value`] for comparison and never used
//! as the reported concentration.

use num_complex::Complex64;

use crate::bounds::{CoeffVector, HalfSampleFamily};
use crate::dpss::OrthoBasis;
use crate::error::{Error, Result};
use crate::fracshift::{total_energy, window_energy, ShiftSpec, TailWindow};
use crate::numeric::compensated_sum;
use crate::sequence::Sequence;

/// Inputs whose energy differs from one by more than this are normalized.
pub const UNIT_ENERGY_TOL: f64 = 1e-10;
/// Relative energy deviation that earns an explicit notice.
pub const NORMALIZATION_NOTICE_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationReport {
    /// `ā_l`, all `2N+3` members.
    pub coeffs: CoeffVector,
    /// Energy of the sequence as given, before normalization.
    pub input_energy: f64,
    pub normalized: bool,
    pub notice: Option<String>,
    /// `Σ_{n=−N/2}^{N/2+1} |{B_{1/2}^{1/2} r}[n]|²`, from samples.
    pub window_energy: f64,
    /// The same window energy from the coefficients (paired form).
    pub window_energy_from_coeffs: f64,
    /// Exact tail, total minus window.
    pub tail_energy: f64,
    /// `8 Σ |ā_l|² λ̄_l (1 − λ̄_l)`.
    pub tail_from_coeffs: f64,
    pub total_energy: f64,
    /// `window_energy / total_energy`.
    pub direct_value: f64,
    /// Concentration from the paired coefficient form.
    pub paired_value: f64,
    /// Compact closed form; `None` when its denominator is not positive.
    pub formula_value: Option<f64>,
    /// `Σ_{l=0}^{N} λ̄_l |ā_l|²`.
    pub weighted_coeff_energy: f64,
    /// `Σ_{l=0}^{N} |ā_l|²`, one half for unit-energy input.
    pub coeff_energy: f64,
    /// Reported concentration: `direct_value`, with rounding overshoot above
    /// one clamped to `1.0`.
    pub concentration: f64,
}

/// Rounding floor for the ranking check. Concentrations of the leading
/// members differ from one by `4λ̄_p`, which for large `N` is far below the
/// absolute accuracy (about `1e-16`) of the small paired eigenvalues.
pub const RANKING_TOL: f64 = 2e-15;

/// Tolerance for rounding overshoot of a ratio above one.
const OVERSHOOT_TOL: f64 = 1e-12;

impl HalfSampleFamily {
    /// Concentration of `r` after a full-band half-sample shift.
    pub fn concentration(&self, r: &Sequence) -> Result<ConcentrationReport> {
        self.check(r)?;
        let input_energy = r.energy();
        if input_energy == 0.0 {
            return Err(Error::ZeroEnergy);
        }
        let deviation = (input_energy - 1.0).abs();
        let (unit, normalized) = if deviation > UNIT_ENERGY_TOL {
            (r.normalized()?, true)
        } else {
            (r.clone(), false)
        };
        let notice = (deviation > NORMALIZATION_NOTICE_THRESHOLD)
            .then(|| format!("input energy {input_energy} is not unit; sequence was normalized before evaluation"));

        let n = self.n();
        let coeffs = self.coeffs(&unit)?;
        let w2 = |l: usize| coeffs.get(l).norm_sqr();
        let tail_from_coeffs = 8.0 * compensated_sum((0..=n).map(|l| w2(l) * self.eigenvalue(l) * self.complement(l)));
        let paired_square = compensated_sum((0..=n).map(|l| {
            let (a, b) = (self.eigenvalue(l), self.complement(l));
            w2(l) * (a * a + b * b)
        }));
        let energy = unit.energy();
        let window_energy_from_coeffs = 4.0 * paired_square - energy;
        let paired_value = window_energy_from_coeffs / (window_energy_from_coeffs + tail_from_coeffs);

        let spec = ShiftSpec::half_sample();
        let window = TailWindow::half_sample(n);
        let total = total_energy(&unit, &spec);
        let inside = window_energy(&unit, &spec, &window);
        let direct_value = inside / total;

        let tail_sum = compensated_sum((0..=n).map(|l| w2(l) * self.eigenvalue(l) * self.complement(l)));
        let square_sum = compensated_sum((0..=n).map(|l| self.eigenvalue(l).powi(2) * w2(l)));
        let denominator = square_sum - 0.125;
        let formula_value = (denominator > 0.0).then(|| 1.0 / (1.0 + tail_sum / denominator));

        if direct_value > 1.0 + OVERSHOOT_TOL {
            return Err(Error::Internal(format!(
                "window energy exceeds total energy: ratio {direct_value}"
            )));
        }

        Ok(ConcentrationReport {
            input_energy,
            normalized,
            notice,
            window_energy: inside,
            window_energy_from_coeffs,
            tail_energy: total - inside,
            tail_from_coeffs,
            total_energy: total,
            direct_value,
            paired_value,
            formula_value,
            weighted_coeff_energy: compensated_sum((0..=n).map(|l| self.eigenvalue(l) * w2(l))),
            coeff_energy: compensated_sum((0..=n).map(w2)),
            concentration: direct_value.min(1.0),
            coeffs,
        })
    }

    /// `r* = √2·s_0[2n]` with its report.
    pub fn optimal_sequence(&self) -> Result<OptimalSequence> {
        let basis = OrthoBasis::from_set(self.set().clone())?;
        let sequence = basis.member_sequence(0);
        let report = self.concentration(&sequence)?;
        let (lam, comp) = (self.eigenvalue(0), self.complement(0));
        Ok(OptimalSequence {
            sequence,
            report,
            optimum: (1.0 - 4.0 * lam * comp).min(1.0),
            closed_form_value: 1.0 / (1.0 + lam * comp / (lam * lam - 0.125)),
        })
    }

    /// The even-sample basis with each member's concentration.
    pub fn ranked_basis(&self) -> Result<RankedBasis> {
        let basis = OrthoBasis::from_set(self.set().clone())?;
        // For member l, ā = e_l/√2: tail 4λ̄_lλ̄_p, window 1 − tail. A paired
        // eigenvalue that rounds below zero would push the ratio above one.
        let concentrations: Vec<f64> = (0..basis.len())
            .map(|l| (1.0 - 4.0 * self.eigenvalue(l) * self.complement(l)).min(1.0))
            .collect();
        if let Some(l) = concentrations.windows(2).position(|w| w[1] > w[0] + RANKING_TOL) {
            return Err(Error::Internal(format!(
                "basis concentrations increase between members {l} and {}",
                l + 1
            )));
        }
        Ok(RankedBasis { basis, concentrations })
    }

    /// Evaluate the two quadratic forms of the concentration ratio in matrix
    /// form and cross-check them against the scalar sums.
    pub fn matrix_form(&self, r: &Sequence) -> Result<MatrixForm> {
        self.check(r)?;
        let n = self.n();
        let h = (n / 2) as isize;
        let set = self.set();

        // S[n][l] = s_l[2n], rows n = −N/2..=N/2, columns l = 0..=N.
        let s: Vec<Vec<f64>> = (-h..=h)
            .map(|k| (0..=n).map(|l| set.sample(l, 2 * k)).collect())
            .collect();
        let projected: Vec<Complex64> = (0..=n)
            .map(|l| {
                let re = compensated_sum(s.iter().zip(r.values()).map(|(row, v)| row[l] * v.re));
                let im = compensated_sum(s.iter().zip(r.values()).map(|(row, v)| row[l] * v.im));
                Complex64::new(re, im)
            })
            .collect();

        // Full eigenvalue vector and its exchange: (Jλ)_l = λ_{2N+2−l}.
        let lambda = set.eigenvalues();
        let exchanged: Vec<f64> = lambda.iter().rev().copied().collect();
        if exchanged.len() != 2 * n + 3 {
            return Err(Error::Internal("eigenvalue vector has the wrong length".into()));
        }

        let q1_components: Vec<f64> = (0..=n)
            .map(|l| lambda[l] * exchanged[l] * projected[l].norm_sqr())
            .collect();
        let q2_components: Vec<f64> = (0..=n)
            .map(|l| lambda[l] * lambda[l] * projected[l].norm_sqr())
            .collect();
        let q1 = compensated_sum(q1_components.iter().copied());
        let q2 = compensated_sum(q2_components.iter().copied());

        let coeffs = self.coeffs(r)?;
        let scalar_q1 = compensated_sum(
            (0..=n).map(|l| coeffs.get(l).norm_sqr() * self.eigenvalue(l) * (1.0 - self.eigenvalue(l))),
        );
        let scalar_q2 = compensated_sum((0..=n).map(|l| self.eigenvalue(l).powi(2) * coeffs.get(l).norm_sqr()));
        if (q1 - scalar_q1).abs() > MATRIX_FORM_TOL || (q2 - scalar_q2).abs() > MATRIX_FORM_TOL {
            return Err(Error::Internal(format!(
                "matrix form disagrees with scalar sums: q1 {q1} vs {scalar_q1}, q2 {q2} vs {scalar_q2}"
            )));
        }
        Ok(MatrixForm {
            q1,
            q2,
            scalar_q1,
            scalar_q2,
            q1_components,
            q2_components,
        })
    }
}

pub const MATRIX_FORM_TOL: f64 = 1e-10;

/// Concentration of a single sequence.
pub fn concentration(r: &Sequence) -> Result<ConcentrationReport> {
    HalfSampleFamily::new(r.n())?.concentration(r)
}

/// The most concentrated sequence on `[−N/2, N/2]`.
#[derive(Debug, Clone)]
pub struct OptimalSequence {
    pub sequence: Sequence,
    pub report: ConcentrationReport,
    /// `1 − 4 λ̄_0 λ̄_{2N+2}`.
    pub optimum: f64,
    /// `1 / (1 + λ̄_0(1 − λ̄_0) / (λ̄_0² − 1/8))`, for comparison.
    pub closed_form_value: f64,
}

pub fn optimal_sequence(n: usize) -> Result<OptimalSequence> {
    HalfSampleFamily::new(n)?.optimal_sequence()
}

/// Even-sample basis ordered by concentration.
#[derive(Debug, Clone)]
pub struct RankedBasis {
    pub basis: OrthoBasis,
    /// Nonincreasing in `l`, up to [`RANKING_TOL`].
    pub concentrations: Vec<f64>,
}

pub fn ranked_basis(n: usize) -> Result<RankedBasis> {
    HalfSampleFamily::new(n)?.ranked_basis()
}

/// `q1 = ‖(λJλ)^{1/2} Sᵀ r‖²` and `q2 = ‖(λλ)^{1/2} Sᵀ r‖²` with `S` the
/// even-sample DPSS matrix (no √2), next to the scalar sums
/// `Σ|ā_l|²λ̄_l(1−λ̄_l)` and `Σλ̄_l²|ā_l|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixForm {
    pub q1: f64,
    pub q2: f64,
    pub scalar_q1: f64,
    pub scalar_q2: f64,
    pub q1_components: Vec<f64>,
    pub q2_components: Vec<f64>,
}

pub fn matrix_form_check(r: &Sequence) -> Result<MatrixForm> {
    HalfSampleFamily::new(r.n())?.matrix_form(r)
}
