use anyhow::anyhow;
use halfshift::bounds::{
    identity_holds, tail_bound, upsampled_tail_bound_with, BoundReport, CorrectionForm, HalfSampleFamily,
};
use halfshift::dpss::{compute_dpss, middle_member_even_leakage, DpssParams, OrthoBasis};
use halfshift::fracshift::{
    apply_shift, tail_energy_exact, tail_energy_truncated, total_energy, window_energy, ShiftSpec, TailWindow,
};
use halfshift::random::{unit_complex, unit_real};
use halfshift::Sequence;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::*;
use crate::error::{CliError, CliResult};
use crate::input::read_sequence;
use crate::output::{Cell, Report, Table};

pub fn load_sequence(args: &SequenceArgs) -> CliResult<Sequence> {
    match (&args.input, args.random) {
        (Some(path), _) => read_sequence(path),
        (None, Some(n)) => random_sequence(n, args.seed, args.real),
        (None, None) => Err(CliError::usage(anyhow!("either --input or --random is required"))),
    }
}

pub fn random_sequence(n: usize, seed: u64, real: bool) -> CliResult<Sequence> {
    Sequence::zeros(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(if real {
        unit_real(&mut rng, n)
    } else {
        unit_complex(&mut rng, n)
    })
}

fn window_arg(window: &Option<Vec<usize>>, default: TailWindow) -> TailWindow {
    match window.as_deref() {
        Some([l, m]) => TailWindow::new(*l, *m),
        _ => default,
    }
}

fn sequence_table(name: &'static str, samples: impl Iterator<Item = (isize, halfshift::Complex64)>) -> Table {
    let mut t = Table::new(name, &["n", "re", "im"]);
    for (n, v) in samples {
        t.push(vec![n.into(), v.re.into(), v.im.into()]);
    }
    t
}

pub fn dpss(args: &DpssArgs) -> CliResult<Report> {
    let params = DpssParams::new(args.length, args.half_bandwidth)?;
    let set = compute_dpss(&params)?;
    let mut report = Report::new("dpss")
        .param("length", args.length)
        .param("half_bandwidth", args.half_bandwidth);
    let h = params.half_length() as isize;
    let mut rows = Table::new("rows", &["l", "lambda", "n", "value"]);
    for l in 0..set.len() {
        for n in -h..=h {
            rows.push(vec![
                l.into(),
                set.eigenvalue(l).into(),
                n.into(),
                set.sample(l, n).into(),
            ]);
        }
    }
    report.summary("eigen_residual", set.eigen_residual());
    report.summary("orthonormality_residual", set.orthonormality_residual());
    report.summary("trace_residual", set.trace_residual());
    report.tables.push(rows);
    Ok(report)
}

pub fn shift(args: &ShiftArgs) -> CliResult<Report> {
    let r = load_sequence(&args.sequence)?;
    let spec = ShiftSpec::new(args.half_bandwidth, args.tau)?;
    let window = window_arg(&args.window, TailWindow::half_sample(r.n()));
    let range = window.range();
    let samples = apply_shift(&r, &spec, range.clone());
    let mut report = Report::new("shift")
        .param("n_support", r.n())
        .param("half_bandwidth", args.half_bandwidth)
        .param("tau", args.tau)
        .param("left", window.left)
        .param("right", window.right);
    let tail = tail_energy_exact(&r, &spec, &window)?;
    report.summary("total_energy", total_energy(&r, &spec));
    report.summary("window_energy", window_energy(&r, &spec, &window));
    report.summary("tail_energy", tail.value);
    report.tables.push(sequence_table("rows", range.zip(samples)));
    Ok(report)
}

pub fn tail(args: &TailArgs) -> CliResult<Report> {
    let r = load_sequence(&args.sequence)?;
    let spec = ShiftSpec::new(args.half_bandwidth, args.tau)?;
    let window = window_arg(&args.window, TailWindow::half_sample(r.n()));
    let exact = tail_energy_exact(&r, &spec, &window)?;
    let truncated = args
        .tol
        .map(|tol| tail_energy_truncated(&r, &spec, &window, tol))
        .transpose()?;
    let report = Report::new("tail")
        .param("n_support", r.n())
        .param("half_bandwidth", args.half_bandwidth)
        .param("tau", args.tau)
        .param("left", window.left)
        .param("right", window.right)
        .param("tol", args.tol);
    let mut t = Table::new(
        "rows",
        &[
            "total_energy",
            "window_energy",
            "tail_energy",
            "clamped",
            "truncated_tail",
            "horizon",
            "remainder_bound",
        ],
    );
    t.push(vec![
        total_energy(&r, &spec).into(),
        window_energy(&r, &spec, &window).into(),
        exact.value.into(),
        exact.clamped.into(),
        truncated.map(|x| x.value).into(),
        truncated.map(|x| x.horizon).into(),
        truncated.map(|x| x.remainder_bound).into(),
    ]);
    let mut report = report;
    report.tables.push(t);
    Ok(report)
}

fn coefficient_table(report: &BoundReport, eigenvalues: &[f64], paired: Option<&dyn Fn(usize) -> f64>) -> Table {
    let mut columns = vec!["l", "coeff_re", "coeff_im", "lambda"];
    if paired.is_some() {
        columns.push("paired_lambda");
    }
    columns.push("component");
    let mut t = Table::new("coefficients", &columns);
    for (l, a) in report.coeffs.values().iter().enumerate() {
        let mut row: Vec<Cell> = vec![l.into(), a.re.into(), a.im.into(), eigenvalues[l].into()];
        if let Some(p) = paired {
            row.push(p(l).into());
        }
        row.push(report.components.get(l).copied().into());
        t.push(row);
    }
    t
}

pub fn bound(args: &BoundArgs) -> CliResult<Report> {
    let r = load_sequence(&args.sequence)?;
    let w = args.half_bandwidth;
    let b = tail_bound(&r, w)?;
    let set = compute_dpss(&b.coeffs.source_params())?;
    let mut report = Report::new("bound")
        .param("n_support", r.n())
        .param("half_bandwidth", w)
        .param("left", b.window.left)
        .param("right", b.window.right);
    report.summary("bound_value", b.bound_value);
    report.summary("exact_tail", b.exact_value);
    report.summary("slack", b.slack);
    if let Some(window) = window_arg_opt(&args.window) {
        let form = if args.termwise {
            CorrectionForm::TermwiseSquares
        } else {
            CorrectionForm::Interpolated
        };
        let u = upsampled_tail_bound_with(&r, w, &window, form)?;
        report.summary("upsampled_left", window.left);
        report.summary("upsampled_right", window.right);
        report.summary(
            "upsampled_correction_form",
            if args.termwise {
                "termwise_squares"
            } else {
                "interpolated"
            },
        );
        report.summary("shifted_tail", u.shifted_tail);
        report.summary("upsampled_rhs", u.rhs);
        report.summary("correction", u.correction);
        report.summary("upsampled_slack", u.slack());
    }
    report.tables.push(coefficient_table(&b, set.eigenvalues(), None));
    Ok(report)
}

fn window_arg_opt(window: &Option<Vec<usize>>) -> Option<TailWindow> {
    match window.as_deref() {
        Some([l, m]) => Some(TailWindow::new(*l, *m)),
        _ => None,
    }
}

pub fn equality(args: &EqualityArgs) -> CliResult<Report> {
    let r = load_sequence(&args.sequence)?;
    let family = HalfSampleFamily::new(r.n())?;
    let b = family.full_band_tail(&r)?;
    let exact = b.exact_value.unwrap_or(f64::NAN);
    let mut report = Report::new("equality")
        .param("n_support", r.n())
        .param("left", b.window.left)
        .param("right", b.window.right);
    report.summary("equality_value", b.bound_value);
    report.summary("exact_tail", exact);
    report.summary("abs_difference", (b.bound_value - exact).abs());
    report.summary("holds", identity_holds(b.bound_value, exact));
    let paired = |l: usize| family.complement(l);
    report
        .tables
        .push(coefficient_table(&b, family.set().eigenvalues(), Some(&paired)));
    Ok(report)
}

pub fn concentration(args: &ConcentrationArgs) -> CliResult<Report> {
    if let Some(n) = args.n {
        return ranked(n);
    }
    let seq_args = SequenceArgs {
        input: args.input.clone(),
        random: args.random,
        seed: args.seed,
        real: false,
    };
    let r = load_sequence(&seq_args)?;
    let family = HalfSampleFamily::new(r.n())?;
    let c = family.concentration(&r)?;
    if let Some(notice) = &c.notice {
        eprintln!("notice: {notice}");
    }
    let mut report = Report::new("concentration").param("n_support", r.n());
    report.summary("input_energy", c.input_energy);
    report.summary("normalized", c.normalized);
    report.summary("concentration", c.concentration);
    report.summary("direct_value", c.direct_value);
    report.summary("paired_value", c.paired_value);
    report.summary("formula_value", c.formula_value);
    report.summary("window_energy", c.window_energy);
    report.summary("window_energy_from_coeffs", c.window_energy_from_coeffs);
    report.summary("tail_energy", c.tail_energy);
    report.summary("tail_from_coeffs", c.tail_from_coeffs);
    report.summary("total_energy", c.total_energy);
    report.summary("coeff_energy", c.coeff_energy);
    report.summary("weighted_coeff_energy", c.weighted_coeff_energy);
    let mut t = Table::new(
        "coefficients",
        &["l", "coeff_re", "coeff_im", "lambda", "paired_lambda"],
    );
    for (l, a) in c.coeffs.values().iter().enumerate() {
        t.push(vec![
            l.into(),
            a.re.into(),
            a.im.into(),
            family.eigenvalue(l).into(),
            family.complement(l).into(),
        ]);
    }
    report.tables.push(t);
    Ok(report)
}

fn ranked(n: usize) -> CliResult<Report> {
    let family = HalfSampleFamily::new(n)?;
    let rb = family.ranked_basis()?;
    let best = family.optimal_sequence()?;
    let mut report = Report::new("concentration").param("n_support", n);
    report.summary("optimum", best.optimum);
    report.summary("optimal_direct_value", best.report.direct_value);
    report.summary("closed_form_value", best.closed_form_value);
    let mut t = Table::new("rows", &["l", "lambda", "paired_lambda", "concentration"]);
    for (l, c) in rb.concentrations.iter().enumerate() {
        t.push(vec![
            l.into(),
            family.eigenvalue(l).into(),
            family.complement(l).into(),
            (*c).into(),
        ]);
    }
    report.tables.push(t);
    Ok(report)
}

pub fn basis(args: &BasisArgs) -> CliResult<Report> {
    let basis = halfshift::dpss::even_subsample_basis(args.n)?;
    let mut report = Report::new("basis").param("n_support", args.n);
    report.summary("gram_residual", basis.gram_residual());
    report.summary("middle_even_leakage", middle_member_even_leakage(basis.source())?);
    report.tables.push(basis_table(&basis));
    Ok(report)
}

fn basis_table(basis: &OrthoBasis) -> Table {
    let h = basis.n_half() as isize;
    let mut t = Table::new("rows", &["l", "lambda", "n", "value"]);
    for l in 0..basis.len() {
        for (n, v) in (-h..=h).zip(basis.member(l)) {
            t.push(vec![
                l.into(),
                basis.source_eigenvalues()[l].into(),
                n.into(),
                (*v).into(),
            ]);
        }
    }
    t
}

pub fn random(args: &RandomArgs) -> CliResult<Report> {
    let r = random_sequence(args.n, args.seed, args.real)?;
    let mut report = Report::new("random")
        .param("n_support", args.n)
        .param("seed", args.seed)
        .param("real", args.real);
    report.summary("energy", r.energy());
    report.tables.push(sequence_table("rows", r.iter()));
    Ok(report)
}
