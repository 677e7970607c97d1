//! Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails. Each criterion checks its own tolerance and its
//! runtime budget.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use halfshift::bounds::{
    full_band_tail, identity_holds, upsampled_tail_bound, upsampled_tail_identity, TailBoundContext,
};
use halfshift::concentration::RANKING_TOL;
use halfshift::dpss::{even_subsample_basis, flip_pairing_report, middle_member_even_leakage};
use halfshift::fracshift::{shifted_sample, tail_energy_truncated, ShiftSpec, TailWindow};
use halfshift::random::unit_complex;
use halfshift::{compute_dpss, DpssParams, HalfSampleFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Half-sample shift of `r` against the unit shift of `r↑2` at half the band.
fn shift_identity() -> Outcome {
    let mut g = rng(1);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for n in [2usize, 4, 8, 16, 32] {
        for _ in 0..40 {
            let r = unit_complex(&mut g, n);
            let up = r.upsample2();
            for w in [0.1, 0.25, 0.4, 0.5] {
                let half = ShiftSpec::new(w, 0.5).unwrap();
                let unit = ShiftSpec::new(w / 2.0, 1.0).unwrap();
                let span = 2 * n as isize;
                for k in -span..=span {
                    let d = shifted_sample(&r, &half, k) - shifted_sample(&up, &unit, 2 * k);
                    worst = worst.max(d.norm());
                }
            }
            cases += 1;
        }
    }
    outcome(
        worst <= 1e-12,
        format!("{cases} sequences, max |lhs - rhs| = {worst:.3e} (tol 1e-12)"),
    )
}

fn dpss_correctness() -> Outcome {
    let mut worst_res: f64 = 0.0;
    for (m, w) in [(19, 0.25), (35, 0.25), (33, 0.1)] {
        let set = compute_dpss(&DpssParams::new(m, w).unwrap()).unwrap();
        worst_res = worst_res
            .max(set.eigen_residual())
            .max(set.orthonormality_residual())
            .max(set.trace_residual());
    }
    let (mut sym, mut mid): (f64, f64) = (0.0, 0.0);
    for n in (2..=32).step_by(2) {
        let set = compute_dpss(&DpssParams::half_sample_family(n).unwrap()).unwrap();
        let rep = flip_pairing_report(&set).unwrap();
        sym = sym.max(rep.flip_residual).max(rep.pairing_residual);
        mid = mid.max((set.eigenvalue(n + 1) - 0.5).abs());
    }
    outcome(
        worst_res <= 1e-9 && sym <= 1e-9 && mid <= 1e-10,
        format!(
            "reference residuals {worst_res:.3e} (tol 1e-9), flip/pairing {sym:.3e} (tol 1e-9), |middle - 1/2| {mid:.3e} (tol 1e-10)"
        ),
    )
}

fn even_basis() -> Outcome {
    let (mut gram, mut leak): (f64, f64) = (0.0, 0.0);
    for n in (2..=64).step_by(2) {
        let basis = even_subsample_basis(n).unwrap();
        gram = gram.max(basis.gram_residual());
        leak = leak.max(middle_member_even_leakage(basis.source()).unwrap());
    }
    outcome(
        gram <= 1e-9 && leak <= 1e-9,
        format!("N = 2..64: gram residual {gram:.3e}, middle member even samples {leak:.3e} (tol 1e-9)"),
    )
}

fn tail_bound_inequality() -> Outcome {
    let mut g = rng(4);
    let (mut worst_slack, mut worst_cross) = (f64::INFINITY, 0.0f64);
    let mut cases = 0;
    for n in [2usize, 4, 8, 16] {
        for w in [0.1, 0.2, 0.3, 0.4, 0.5] {
            let ctx = TailBoundContext::new(n, w).unwrap();
            for i in 0..25 {
                let r = unit_complex(&mut g, n);
                let b = ctx.bound(&r).unwrap();
                let exact = b.exact_value.unwrap();
                if i == 0 {
                    let spec = ShiftSpec::new(w, 0.5).unwrap();
                    let t = tail_energy_truncated(&r, &spec, &b.window, 1e-10).unwrap();
                    worst_cross = worst_cross.max((t.value - exact).abs());
                }
                worst_slack = worst_slack.min(b.bound_value - exact);
                cases += 1;
            }
        }
    }
    outcome(
        cases >= 500 && worst_slack >= -1e-10 && worst_cross <= 1e-9,
        format!(
            "{cases} cases, min(bound - exact) = {worst_slack:.3e} (tol -1e-10), truncated cross-check {worst_cross:.3e}"
        ),
    )
}

fn full_band_equality() -> Outcome {
    let mut g = rng(5);
    let mut worst: f64 = 0.0;
    let mut held = true;
    for n in [2usize, 4, 8, 16] {
        for _ in 0..100 {
            let r = unit_complex(&mut g, n);
            let b = full_band_tail(&r).unwrap();
            let exact = b.exact_value.unwrap();
            held &= identity_holds(b.bound_value, exact);
            worst = worst.max((b.bound_value - exact).abs() / exact.abs().max(1e-300));
        }
    }
    outcome(
        held,
        format!("400 cases, max relative difference {worst:.3e} (tol 1e-8 rel, 1e-12 abs)"),
    )
}

/// Taken literally: the compact closed form against the direct ratio, and
/// the weighted coefficient energy against 1/4.
fn closed_form_concentration() -> Outcome {
    let mut g = rng(6);
    let (mut formula, mut weighted, mut paired): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for n in [2usize, 4, 8, 16] {
        let family = HalfSampleFamily::new(n).unwrap();
        for _ in 0..100 {
            let r = unit_complex(&mut g, n);
            let c = family.concentration(&r).unwrap();
            let f = c.formula_value.map_or(f64::INFINITY, |v| (v - c.direct_value).abs());
            formula = formula.max(f);
            weighted = weighted.max((c.weighted_coeff_energy - 0.25).abs());
            paired = paired.max((c.paired_value - c.direct_value).abs());
        }
    }
    outcome(
        formula <= 1e-8 && weighted <= 1e-9,
        format!(
            "max |formula - direct| {formula:.3e} (tol 1e-8), max |weighted energy - 1/4| {weighted:.3e} (tol 1e-9); paired form vs direct {paired:.3e}"
        ),
    )
}

fn optimality() -> Outcome {
    let mut g = rng(7);
    let mut worst_excess = f64::NEG_INFINITY;
    let mut strict = true;
    for n in [2usize, 4, 8] {
        let family = HalfSampleFamily::new(n).unwrap();
        let best = family.optimal_sequence().unwrap().report.concentration;
        for _ in 0..10_000 {
            let r = unit_complex(&mut g, n);
            let c = family.concentration(&r).unwrap().concentration;
            worst_excess = worst_excess.max(c - best);
        }
        let ranked = family.ranked_basis().unwrap().concentrations;
        strict &= ranked.windows(2).all(|w| w[1] < w[0]);
    }
    let mut ordered = true;
    for n in (10..=64).step_by(2) {
        let ranked = HalfSampleFamily::new(n).unwrap().ranked_basis().unwrap().concentrations;
        ordered &= ranked.windows(2).all(|w| w[1] <= w[0] + RANKING_TOL);
    }
    outcome(
        worst_excess <= 1e-9 && strict && ordered,
        format!(
            "3 x 10^4 sequences, max excess over optimum {worst_excess:.3e} (tol 1e-9); ranked strictly decreasing for N = 2, 4, 8: {strict}; N = 10..64 within rounding floor: {ordered}"
        ),
    )
}

fn upsampled_bound() -> Outcome {
    let mut g = rng(8);
    let (mut slack, mut identity) = (f64::INFINITY, 0.0f64);
    for n in [2usize, 4, 8, 16] {
        let h = n / 2;
        for _ in 0..25 {
            let r = unit_complex(&mut g, n);
            for w in [0.1, 0.25, 0.4, 0.5] {
                for window in [TailWindow::centered(n), TailWindow::new(h + 1, h + 2)] {
                    slack = slack.min(upsampled_tail_bound(&r, w, &window).unwrap().slack());
                }
            }
            for dl in 0..3 {
                for dm in 1..4 {
                    let (lhs, rhs) = upsampled_tail_identity(&r, &TailWindow::new(h + dl, h + dm)).unwrap();
                    identity = identity.max((lhs - rhs).abs());
                }
            }
        }
    }
    outcome(
        slack >= -1e-10 && identity <= 1e-9,
        format!("min slack {slack:.3e} (tol -1e-10), full-band identity {identity:.3e} (tol 1e-9)"),
    )
}

fn verify_output(seed: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_halfshift"))
        .args(["verify", "--seed", seed, "--format", "json"])
        .env_remove("HALFSHIFT_OUT_DIR")
        .output()
        .expect("verify runs");
    out.stdout
}

fn determinism() -> Outcome {
    let a = verify_output("2024");
    let b = verify_output("2024");
    let c = verify_output("2025");
    outcome(
        !a.is_empty() && a == b && a != c,
        format!(
            "{} bytes, identical on rerun: {}, differs for another seed: {}",
            a.len(),
            a == b,
            a != c
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("shift identity", 10, shift_identity),
        ("dpss correctness", 5, dpss_correctness),
        ("even-sample basis", 20, even_basis),
        ("tail bound inequality", 60, tail_bound_inequality),
        ("full-band equality", 30, full_band_equality),
        ("closed-form concentration", 30, closed_form_concentration),
        ("optimal concentration", 60, optimality),
        ("upsampled bound and identity", 30, upsampled_bound),
        ("verify determinism", 60, determinism),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let pass = o.pass && in_time;
        failed += usize::from(!pass);
        println!(
            "criterion {}: {} {name}: {} [{:.2}s of {budget}s]",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
