//! Verification suites behind `halfshift verify`.
//!
//! Each suite emits [`ReportRow`]s with a fixed column set. A row's
//! `residual` is nonnegative and the row passes when it does not exceed
//! `tolerance`. Rows with status `info` record quantities that are reported
//! for comparison and never fail a run.
//!
//! Random inputs come from ChaCha8 streams seeded from the run seed, the
//! suite and the case parameters, so a run is reproducible bit for bit.

use anyhow::anyhow;
use halfshift::bounds::{
    upsampled_tail_bound, upsampled_tail_identity, HalfSampleFamily, TailBoundContext, IDENTITY_ABS_TOL,
    IDENTITY_REL_FLOOR, IDENTITY_REL_TOL,
};
use halfshift::concentration::RANKING_TOL;
use halfshift::dpss::{compute_dpss, flip_pairing_report, middle_member_even_leakage, DpssParams, OrthoBasis};
use halfshift::fracshift::{
    shifted_sample, tail_energy_exact, tail_energy_truncated, total_energy, ShiftSpec, TailWindow,
};
use halfshift::random::unit_complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Report, Table};

pub const ROW_COLUMNS: [&str; 11] = [
    "check",
    "metric",
    "n",
    "length",
    "half_bandwidth",
    "cases",
    "value",
    "reference",
    "residual",
    "tolerance",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail,
    Info,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "fail",
            RowStatus::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub check: &'static str,
    pub metric: &'static str,
    pub n: Option<usize>,
    pub length: Option<usize>,
    pub half_bandwidth: Option<f64>,
    pub cases: usize,
    pub value: f64,
    pub reference: f64,
    pub residual: f64,
    pub tolerance: Option<f64>,
    pub status: RowStatus,
}

impl ReportRow {
    fn cells(&self) -> Vec<Cell> {
        vec![
            self.check.into(),
            self.metric.into(),
            self.n.into(),
            self.length.into(),
            self.half_bandwidth.into(),
            self.cases.into(),
            self.value.into(),
            self.reference.into(),
            self.residual.into(),
            self.tolerance.into(),
            self.status.as_str().into(),
        ]
    }
}

/// A named group of checks.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(&mut Ctx) -> CliResult<()>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "shift",
        about: "half-sample shift equals unit shift of the zero-stuffed sequence",
        run: suite_shift,
    },
    Suite {
        name: "energy",
        about: "shift invariance and doubling of total energy, brute-force tail cross-check",
        run: suite_energy,
    },
    Suite {
        name: "dpss",
        about: "eigen, orthonormality and trace residuals; quarter-band symmetries",
        run: suite_dpss,
    },
    Suite {
        name: "basis",
        about: "even samples of the quarter-band DPSS form an orthonormal basis",
        run: suite_basis,
    },
    Suite {
        name: "bound",
        about: "DPSS bound dominates the exact half-sample tail",
        run: suite_bound,
    },
    Suite {
        name: "equality",
        about: "full-band tail equals its DPSS coefficient expression",
        run: suite_equality,
    },
    Suite {
        name: "upsampled",
        about: "tail bound through the zero-stuffed sequence, and its full-band identity",
        run: suite_upsampled,
    },
    Suite {
        name: "concentration",
        about: "coefficient forms of the post-shift concentration",
        run: suite_concentration,
    },
    Suite {
        name: "optimality",
        about: "random search never beats the leading basis member; ranking is monotone",
        run: suite_optimality,
    },
    Suite {
        name: "matrix",
        about: "matrix form of the concentration quadratics equals the scalar sums",
        run: suite_matrix,
    },
];

/// Suites selected by `--only` names, in canonical order.
pub fn select(only: &[String]) -> CliResult<Vec<&'static Suite>> {
    if only.is_empty() {
        return Ok(SUITES.iter().collect());
    }
    for name in only {
        if !SUITES.iter().any(|s| s.name.eq_ignore_ascii_case(name)) {
            let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
            return Err(CliError::usage(anyhow!(
                "unknown suite `{name}`; available: {}",
                names.join(", ")
            )));
        }
    }
    Ok(SUITES
        .iter()
        .filter(|s| only.iter().any(|o| s.name.eq_ignore_ascii_case(o)))
        .collect())
}

/// Outcome of a verification run.
pub struct Verification {
    pub rows: Vec<ReportRow>,
}

impl Verification {
    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.status == RowStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn report(&self, config: &RunConfig, suites: &[&Suite]) -> Report {
        let join = |v: Vec<String>| v.join(",");
        let mut report = Report::new("verify")
            .param("seed", config.seed)
            .param("n_list", join(config.n_list.iter().map(ToString::to_string).collect()))
            .param("w_list", join(config.w_list.iter().map(ToString::to_string).collect()))
            .param("tol", config.tol)
            .param("cases", config.cases)
            .param("search_samples", config.search_samples)
            .param("suites", join(suites.iter().map(|s| s.name.to_owned()).collect()));
        let count = |s: RowStatus| self.rows.iter().filter(|r| r.status == s).count();
        report.summary("checks", self.rows.len());
        report.summary("passed", count(RowStatus::Pass));
        report.summary("failed", count(RowStatus::Fail));
        report.summary("info", count(RowStatus::Info));
        report.summary("all_passed", self.passed());
        let mut t = Table::new("rows", &ROW_COLUMNS);
        for row in &self.rows {
            t.push(row.cells());
        }
        report.tables.push(t);
        report
    }
}

pub fn run(config: &RunConfig, suites: &[&Suite]) -> CliResult<Verification> {
    config.validate()?;
    let mut ctx = Ctx {
        config,
        suite_index: 0,
        rows: Vec::new(),
    };
    for suite in suites {
        ctx.suite_index = SUITES.iter().position(|s| s.name == suite.name).unwrap_or(0) as u64;
        (suite.run)(&mut ctx)?;
    }
    Ok(Verification { rows: ctx.rows })
}

struct Ctx<'a> {
    config: &'a RunConfig,
    suite_index: u64,
    rows: Vec<ReportRow>,
}

/// Parameters shared by the rows of one case.
#[derive(Clone, Copy, Default)]
struct Case {
    n: Option<usize>,
    length: Option<usize>,
    w: Option<f64>,
    cases: usize,
}

impl Case {
    fn n(n: usize) -> Self {
        Case {
            n: Some(n),
            cases: 1,
            ..Case::default()
        }
    }

    fn nw(n: usize, w: f64, cases: usize) -> Self {
        Case {
            n: Some(n),
            w: Some(w),
            cases,
            ..Case::default()
        }
    }

    fn cases(self, cases: usize) -> Self {
        Case { cases, ..self }
    }
}

impl Ctx<'_> {
    fn rng(&self, n: usize, w: f64, salt: u64) -> ChaCha8Rng {
        let mut h = splitmix(self.config.seed);
        for part in [self.suite_index, n as u64, w.to_bits(), salt] {
            h = splitmix(h ^ part);
        }
        ChaCha8Rng::seed_from_u64(h)
    }

    fn tol(&self, default: f64) -> f64 {
        self.config.tol.unwrap_or(default)
    }

    #[allow(clippy::too_many_arguments)]
    fn check(
        &mut self,
        check: &'static str,
        metric: &'static str,
        case: Case,
        value: f64,
        reference: f64,
        residual: f64,
        tol: f64,
    ) {
        let tolerance = self.tol(tol);
        let status = if residual <= tolerance {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        };
        self.push(check, metric, case, value, reference, residual, Some(tolerance), status);
    }

    /// A residual that should be zero.
    fn residual(&mut self, check: &'static str, metric: &'static str, case: Case, residual: f64, tol: f64) {
        self.check(check, metric, case, residual, 0.0, residual, tol);
    }

    fn info(&mut self, check: &'static str, metric: &'static str, case: Case, value: f64, reference: f64) {
        self.push(
            check,
            metric,
            case,
            value,
            reference,
            (value - reference).abs(),
            None,
            RowStatus::Info,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        check: &'static str,
        metric: &'static str,
        case: Case,
        value: f64,
        reference: f64,
        residual: f64,
        tolerance: Option<f64>,
        status: RowStatus,
    ) {
        self.rows.push(ReportRow {
            check,
            metric,
            n: case.n,
            length: case.length,
            half_bandwidth: case.w,
            cases: case.cases,
            value,
            reference,
            residual,
            tolerance,
            status,
        });
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn suite_shift(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        for &w in &cfg.w_list {
            let mut rng = ctx.rng(n, w, 0);
            let half = ShiftSpec::new(w, 0.5)?;
            let unit = ShiftSpec::new(w / 2.0, 1.0)?;
            let span = 2 * n as isize;
            let mut worst: f64 = 0.0;
            for _ in 0..cfg.cases {
                let r = unit_complex(&mut rng, n);
                let up = r.upsample2();
                for k in -span..=span {
                    let d = shifted_sample(&r, &half, k) - shifted_sample(&up, &unit, 2 * k);
                    worst = worst.max(d.norm());
                }
            }
            ctx.residual(
                "shift",
                "half_vs_upsampled_unit_shift",
                Case::nw(n, w, cfg.cases),
                worst,
                1e-12,
            );
        }
    }
    Ok(())
}

fn suite_energy(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        for &w in &cfg.w_list {
            let mut rng = ctx.rng(n, w, 0);
            let mut shift_dev: f64 = 0.0;
            let mut doubling_dev: f64 = 0.0;
            for _ in 0..cfg.cases {
                let r = unit_complex(&mut rng, n);
                let base = total_energy(&r, &ShiftSpec::unshifted(w)?);
                for tau in [0.3, 0.5, 1.7] {
                    shift_dev = shift_dev.max((total_energy(&r, &ShiftSpec::new(w, tau)?) - base).abs());
                }
                let up = total_energy(&r.upsample2(), &ShiftSpec::unshifted(w / 2.0)?);
                doubling_dev = doubling_dev.max((up - 2.0 * base).abs());
            }
            let case = Case::nw(n, w, cfg.cases);
            ctx.residual("energy", "total_energy_shift_invariance", case, shift_dev, 1e-12);
            ctx.residual("energy", "upsampled_total_energy_doubles", case, doubling_dev, 1e-10);

            // One brute-force cross-check per case.
            let r = unit_complex(&mut rng, n);
            let spec = ShiftSpec::new(w, 0.5)?;
            let window = TailWindow::centered(n);
            let exact = tail_energy_exact(&r, &spec, &window)?.value;
            let oracle_tol = 1e-10;
            let truncated = tail_energy_truncated(&r, &spec, &window, oracle_tol)?;
            ctx.check(
                "energy",
                "exact_vs_truncated_tail",
                case.cases(1),
                exact,
                truncated.value,
                (exact - truncated.value).abs(),
                oracle_tol.max(1e-9),
            );
        }
    }
    Ok(())
}

fn suite_dpss(ctx: &mut Ctx) -> CliResult<()> {
    for (m, w) in [(19, 0.25), (35, 0.25), (33, 0.1)] {
        let set = compute_dpss(&DpssParams::new(m, w)?)?;
        let case = Case {
            length: Some(m),
            w: Some(w),
            cases: 1,
            ..Case::default()
        };
        ctx.residual("dpss", "eigen_residual", case, set.eigen_residual(), 1e-9);
        ctx.residual(
            "dpss",
            "orthonormality_residual",
            case,
            set.orthonormality_residual(),
            1e-9,
        );
        ctx.residual("dpss", "trace_residual", case, set.trace_residual(), 1e-9);
    }
    for &n in &ctx.config.n_list {
        let params = DpssParams::half_sample_family(n)?;
        let set = compute_dpss(&params)?;
        let report = flip_pairing_report(&set)?;
        let case = Case {
            n: Some(n),
            length: Some(params.length()),
            w: Some(0.25),
            cases: 1,
        };
        ctx.residual("dpss", "flip_residual", case, report.flip_residual, 1e-9);
        ctx.residual("dpss", "pairing_residual", case, report.pairing_residual, 1e-9);
        let mid = set.eigenvalue(n + 1);
        ctx.check("dpss", "middle_eigenvalue", case, mid, 0.5, (mid - 0.5).abs(), 1e-10);
    }
    Ok(())
}

fn suite_basis(ctx: &mut Ctx) -> CliResult<()> {
    for &n in &ctx.config.n_list {
        let basis = halfshift::dpss::even_subsample_basis(n)?;
        ctx.residual("basis", "gram_residual", Case::n(n), basis.gram_residual(), 1e-9);
        let leak = middle_member_even_leakage(basis.source())?;
        ctx.residual("basis", "middle_member_even_samples", Case::n(n), leak, 1e-9);
    }
    Ok(())
}

fn suite_bound(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        for &w in &cfg.w_list {
            let mut rng = ctx.rng(n, w, 0);
            let bound_ctx = TailBoundContext::new(n, w)?;
            let mut min_slack = f64::INFINITY;
            let mut component_dev: f64 = 0.0;
            for _ in 0..cfg.cases {
                let r = unit_complex(&mut rng, n);
                let b = bound_ctx.bound(&r)?;
                min_slack = min_slack.min(b.slack.unwrap_or(f64::NAN));
                let sum: f64 = b.components.iter().sum();
                component_dev = component_dev.max((sum - b.bound_value).abs());
            }
            let case = Case::nw(n, w, cfg.cases);
            ctx.check("bound", "min_slack", case, min_slack, 0.0, (-min_slack).max(0.0), 1e-10);
            ctx.residual("bound", "component_sum", case, component_dev, 1e-12);
        }
    }
    Ok(())
}

fn suite_equality(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        let family = HalfSampleFamily::new(n)?;
        let mut rng = ctx.rng(n, 0.5, 0);
        let (mut rel, mut abs, mut n_rel, mut n_abs) = (0.0f64, 0.0f64, 0, 0);
        let mut middle: f64 = 0.0;
        for _ in 0..cfg.cases {
            let r = unit_complex(&mut rng, n);
            let b = family.full_band_tail(&r)?;
            let exact = b.exact_value.unwrap_or(f64::NAN);
            let diff = (b.bound_value - exact).abs();
            if exact >= IDENTITY_REL_FLOOR {
                rel = rel.max(diff / exact);
                n_rel += 1;
            } else {
                abs = abs.max(diff);
                n_abs += 1;
            }
            middle = middle.max(b.coeffs.get(n + 1).norm());
        }
        let case = Case::nw(n, 0.5, cfg.cases);
        if n_rel > 0 {
            ctx.residual("equality", "relative_error", case.cases(n_rel), rel, IDENTITY_REL_TOL);
        }
        if n_abs > 0 {
            ctx.residual("equality", "absolute_error", case.cases(n_abs), abs, IDENTITY_ABS_TOL);
        }
        ctx.residual("equality", "middle_coefficient", case, middle, 1e-9);
    }
    Ok(())
}

fn suite_upsampled(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        let h = n / 2;
        for &w in &cfg.w_list {
            let mut rng = ctx.rng(n, w, 0);
            let mut min_slack = f64::INFINITY;
            for _ in 0..cfg.cases {
                let r = unit_complex(&mut rng, n);
                for window in [TailWindow::new(h, h), TailWindow::new(h + 1, h + 2)] {
                    min_slack = min_slack.min(upsampled_tail_bound(&r, w, &window)?.slack());
                }
            }
            let case = Case::nw(n, w, 2 * cfg.cases);
            ctx.check(
                "upsampled",
                "min_slack",
                case,
                min_slack,
                0.0,
                (-min_slack).max(0.0),
                1e-10,
            );
        }
        let mut rng = ctx.rng(n, 0.5, 1);
        let mut worst: f64 = 0.0;
        let mut count = 0;
        for _ in 0..cfg.cases {
            let r = unit_complex(&mut rng, n);
            for (dl, dm) in [(0, 1), (0, 3), (1, 1), (2, 2)] {
                let (lhs, rhs) = upsampled_tail_identity(&r, &TailWindow::new(h + dl, h + dm))?;
                worst = worst.max((lhs - rhs).abs());
                count += 1;
            }
        }
        ctx.residual("upsampled", "full_band_identity", Case::nw(n, 0.5, count), worst, 1e-9);
    }
    Ok(())
}

fn suite_concentration(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        let family = HalfSampleFamily::new(n)?;
        let mut rng = ctx.rng(n, 0.5, 0);
        let (mut paired, mut half, mut all_half) = (0.0f64, 0.0f64, 0.0f64);
        let (mut closed, mut quarter) = (0.0f64, 0.0f64);
        for _ in 0..cfg.cases {
            let r = unit_complex(&mut rng, n);
            let c = family.concentration(&r)?;
            paired = paired.max((c.paired_value - c.direct_value).abs());
            half = half.max((c.coeff_energy - 0.5).abs());
            let weighted_all: f64 = (0..2 * n + 3)
                .map(|l| family.eigenvalue(l) * c.coeffs.get(l).norm_sqr())
                .sum();
            all_half = all_half.max((weighted_all - 0.5).abs());
            closed = closed.max(c.formula_value.map_or(f64::INFINITY, |f| (f - c.direct_value).abs()));
            quarter = quarter.max((c.weighted_coeff_energy - 0.25).abs());
        }
        let case = Case::nw(n, 0.5, cfg.cases);
        ctx.residual("concentration", "paired_form_vs_direct", case, paired, 1e-8);
        ctx.residual("concentration", "leading_coefficient_energy_half", case, half, 1e-9);
        ctx.residual(
            "concentration",
            "weighted_coefficient_energy_half",
            case,
            all_half,
            1e-9,
        );
        ctx.info("concentration", "closed_form_vs_direct", case, closed, 0.0);
        ctx.info(
            "concentration",
            "leading_weighted_energy_vs_quarter",
            case,
            quarter,
            0.0,
        );
    }
    Ok(())
}

fn suite_optimality(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        let family = HalfSampleFamily::new(n)?;
        let best = family.optimal_sequence()?;
        let mut rng = ctx.rng(n, 0.5, 0);
        let mut found = f64::NEG_INFINITY;
        for _ in 0..cfg.search_samples {
            let r = unit_complex(&mut rng, n);
            found = found.max(family.concentration(&r)?.concentration);
        }
        let top = best.report.concentration;
        let case = Case::nw(n, 0.5, cfg.search_samples);
        ctx.check(
            "optimality",
            "random_search_max",
            case,
            found,
            top,
            (found - top).max(0.0),
            1e-9,
        );
        ctx.check(
            "optimality",
            "optimum_direct_vs_eigenvalues",
            Case::n(n),
            top,
            best.optimum,
            (top - best.optimum).abs(),
            1e-12,
        );
        let ranked = family.ranked_basis();
        let concentrations: Vec<f64> = match &ranked {
            Ok(rb) => rb.concentrations.clone(),
            // An ordering violation is reported as a failed row, not an abort.
            Err(_) => (0..=n)
                .map(|l| 1.0 - 4.0 * family.eigenvalue(l) * family.complement(l))
                .collect(),
        };
        let increase = concentrations.windows(2).map(|w| w[1] - w[0]).fold(0.0f64, f64::max);
        ctx.residual(
            "optimality",
            "ranked_max_increase",
            Case::n(n).cases(n + 1),
            increase,
            RANKING_TOL,
        );
        ctx.info(
            "optimality",
            "closed_form_optimum",
            Case::n(n),
            best.closed_form_value,
            best.optimum,
        );
    }
    Ok(())
}

fn suite_matrix(ctx: &mut Ctx) -> CliResult<()> {
    let cfg = ctx.config;
    for &n in &cfg.n_list {
        let family = HalfSampleFamily::new(n)?;
        let mut rng = ctx.rng(n, 0.5, 0);
        let (mut q1, mut q2) = (0.0f64, 0.0f64);
        for _ in 0..cfg.cases {
            let r = unit_complex(&mut rng, n);
            let mf = family.matrix_form(&r)?;
            q1 = q1.max((mf.q1 - mf.scalar_q1).abs());
            q2 = q2.max((mf.q2 - mf.scalar_q2).abs());
        }
        let basis = OrthoBasis::from_set(family.set().clone())?;
        let forms = (0..=n)
            .map(|l| family.matrix_form(&basis.member_sequence(l)))
            .collect::<Result<Vec<_>, _>>()?;
        // Member 0 maximizes the denominator and minimizes the numerator,
        // up to the rounding floor of eigenvalues that are 1 in f64.
        let max_q2 = forms.iter().map(|f| f.q2).fold(f64::NEG_INFINITY, f64::max);
        let min_q1 = forms.iter().map(|f| f.q1).fold(f64::INFINITY, f64::min);
        let case = Case::nw(n, 0.5, cfg.cases);
        ctx.residual("matrix", "numerator_quadratic", case, q1, 1e-10);
        ctx.residual("matrix", "denominator_quadratic", case, q2, 1e-10);
        let members = Case::n(n).cases(n + 1);
        ctx.check(
            "matrix",
            "denominator_leading_member_gap",
            members,
            forms[0].q2,
            max_q2,
            max_q2 - forms[0].q2,
            RANKING_TOL,
        );
        ctx.check(
            "matrix",
            "numerator_leading_member_gap",
            members,
            forms[0].q1,
            min_q1,
            forms[0].q1 - min_q1,
            RANKING_TOL,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_by_name() {
        let s = select(&["Basis".into()]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].name, "basis");
        let s = select(&["equality".into(), "bound".into()]).unwrap();
        assert_eq!(s.iter().map(|s| s.name).collect::<Vec<_>>(), ["bound", "equality"]);
        assert!(select(&["nope".into()]).is_err());
        assert_eq!(select(&[]).unwrap().len(), SUITES.len());
    }

    #[test]
    fn seeds_differ_between_cases() {
        let cfg = RunConfig::default();
        let ctx = Ctx {
            config: &cfg,
            suite_index: 0,
            rows: Vec::new(),
        };
        use rand::RngCore;
        let a = ctx.rng(2, 0.1, 0).next_u64();
        let b = ctx.rng(2, 0.2, 0).next_u64();
        let c = ctx.rng(4, 0.1, 0).next_u64();
        assert!(a != b && a != c && b != c);
        assert_eq!(a, ctx.rng(2, 0.1, 0).next_u64());
    }

    #[test]
    fn small_run_passes() {
        let cfg = RunConfig {
            n_list: vec![2, 4],
            w_list: vec![0.25, 0.5],
            cases: 3,
            search_samples: 50,
            ..RunConfig::default()
        };
        let suites: Vec<&Suite> = SUITES.iter().filter(|s| s.name != "energy").collect();
        let v = run(&cfg, &suites).unwrap();
        let failed: Vec<_> = v.failures().collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(v.rows.iter().any(|r| r.status == RowStatus::Info));
    }

    #[test]
    fn tiny_tolerance_fails() {
        let cfg = RunConfig {
            n_list: vec![2],
            tol: Some(1e-20),
            cases: 2,
            ..RunConfig::default()
        };
        let v = run(&cfg, &select(&["dpss".into()]).unwrap()).unwrap();
        assert!(!v.passed());
    }
}
