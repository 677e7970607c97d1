use halfshift::bounds::*;
use halfshift::fracshift::*;
use halfshift::random::{unit_complex, unit_real};
use halfshift::{Complex64, OrthoBasis, Sequence};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_even_n() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![2usize, 4, 8, 16])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dpss_bound_dominates_exact_tail(seed: u64, n in small_even_n(), w in prop::sample::select(vec![0.1, 0.2, 0.3, 0.4, 0.5])) {
        let r = unit_complex(&mut rng(seed), n);
        let report = tail_bound(&r, w).unwrap();
        let slack = report.slack.unwrap();
        prop_assert!(slack >= -1e-10, "slack {slack}");
        let sum: f64 = report.components.iter().sum();
        prop_assert!((sum - report.bound_value).abs() <= 1e-12 * report.bound_value.max(1.0));
        prop_assert!(report.bound_value >= 0.0);
    }

    #[test]
    fn full_band_tail_identity(seed: u64, n in small_even_n(), real: bool) {
        let mut g = rng(seed);
        let r = if real { unit_real(&mut g, n) } else { unit_complex(&mut g, n) };
        let report = full_band_tail(&r).unwrap();
        let exact = report.exact_value.unwrap();
        prop_assert!(identity_holds(report.bound_value, exact), "{} vs {exact}", report.bound_value);
    }

    #[test]
    fn middle_coefficient_vanishes(seed: u64, n in small_even_n()) {
        let r = unit_complex(&mut rng(seed), n);
        let family = HalfSampleFamily::new(n).unwrap();
        let a = family.coeffs(&r).unwrap();
        prop_assert_eq!(a.len(), 2 * n + 3);
        prop_assert!(a.get(n + 1).norm() < 1e-9);
    }

    #[test]
    fn real_input_coefficients_pair_in_magnitude(seed: u64, n in small_even_n()) {
        let r = unit_real(&mut rng(seed), n);
        let family = HalfSampleFamily::new(n).unwrap();
        let a = family.coeffs(&r).unwrap();
        for l in 0..=n {
            prop_assert!((a.get(l).norm() - a.get(2 * n + 2 - l).norm()).abs() < 1e-9);
        }
    }

    #[test]
    fn upsampled_bound_with_correction(seed: u64, n in prop::sample::select(vec![2usize, 4, 8]), w in prop::sample::select(vec![0.1, 0.25, 0.4]), shifted_window: bool) {
        let r = unit_complex(&mut rng(seed), n);
        let h = n / 2;
        let window = if shifted_window { TailWindow::new(h + 1, h + 2) } else { TailWindow::centered(n) };
        let b = upsampled_tail_bound(&r, w, &window).unwrap();
        prop_assert!(b.correction >= 0.0);
        prop_assert!(b.slack() >= -1e-10, "slack {}", b.slack());
    }

    #[test]
    fn upsampled_identity_at_full_band(seed: u64, n in prop::sample::select(vec![2usize, 4, 8, 16]), dl in 0usize..4, dm in 1usize..4) {
        let r = unit_complex(&mut rng(seed), n);
        let window = TailWindow::new(n / 2 + dl, n / 2 + dm);
        let (lhs, rhs) = upsampled_tail_identity(&r, &window).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9);
    }
}

#[test]
fn optimal_sequence_coefficients() {
    for n in [2usize, 8, 16] {
        let family = HalfSampleFamily::new(n).unwrap();
        let basis = OrthoBasis::from_set(family.set().clone()).unwrap();
        let r = basis.member_sequence(0);
        let a = family.coeffs(&r).unwrap();
        assert!((a.get(0).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        for l in 1..=n {
            assert!(a.get(l).norm() < 1e-9, "N = {n}, l = {l}");
        }
        let report = family.full_band_tail(&r).unwrap();
        let expected = 4.0 * family.eigenvalue(0) * family.complement(0);
        assert!((report.bound_value - expected).abs() <= 1e-15);
        assert!(identity_holds(report.bound_value, report.exact_value.unwrap()));
    }
}

#[test]
fn quarter_band_bound_covers_even_subsample_optimum() {
    // The general bound at W = 1/2 uses (2N+1, 1/4); the optimum is built from (2N+3, 1/4).
    for n in [2usize, 4, 8] {
        let basis = halfshift::dpss::even_subsample_basis(n).unwrap();
        let r = basis.member_sequence(0);
        let report = tail_bound(&r, 0.5).unwrap();
        assert!(report.slack.unwrap() >= -1e-10);
    }
}

#[test]
fn zero_sequence_everywhere() {
    let r = Sequence::zeros(8).unwrap();
    for w in [0.1, 0.5] {
        let b = tail_bound(&r, w).unwrap();
        assert_eq!((b.bound_value, b.exact_value), (0.0, Some(0.0)));
    }
    let b = upsampled_tail_bound(&r, 0.25, &TailWindow::centered(8)).unwrap();
    assert_eq!((b.shifted_tail, b.rhs, b.correction), (0.0, 0.0, 0.0));
}

#[test]
fn termwise_squares_correction_differs_from_interpolated() {
    let r = Sequence::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])
    .unwrap()
    .normalized()
    .unwrap();
    let window = TailWindow::centered(2);
    let a = upsampled_tail_bound_with(&r, 0.25, &window, CorrectionForm::Interpolated).unwrap();
    let b = upsampled_tail_bound_with(&r, 0.25, &window, CorrectionForm::TermwiseSquares).unwrap();
    assert!((a.correction - b.correction).abs() > 1e-3);
}

#[test]
fn bound_sweep_over_many_cases() {
    let mut g = rng(7);
    let mut cases = 0;
    for n in [2usize, 4, 8, 16] {
        for w in [0.1, 0.2, 0.3, 0.4, 0.5] {
            let ctx = TailBoundContext::new(n, w).unwrap();
            for _ in 0..30 {
                let r = unit_complex(&mut g, n);
                assert!(ctx.bound(&r).unwrap().slack.unwrap() >= -1e-10);
                cases += 1;
            }
        }
    }
    assert!(cases >= 500);
}
