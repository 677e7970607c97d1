use std::f64::consts::PI;

use halfshift::fracshift::*;
use halfshift::random::unit_complex;
use halfshift::{compute_dpss, Complex64, DpssParams, Sequence};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_seq(seed: u64, n: usize) -> Sequence {
    unit_complex(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

fn even_n() -> impl Strategy<Value = usize> {
    (1usize..=16).prop_map(|h| 2 * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn half_shift_equals_unit_shift_of_upsampled(seed: u64, n in even_n(), w in prop::sample::select(vec![0.1, 0.25, 0.4, 0.5])) {
        let r = random_seq(seed, n);
        let up = r.upsample2();
        let half = ShiftSpec::new(w, 0.5).unwrap();
        let unit = ShiftSpec::new(w / 2.0, 1.0).unwrap();
        let n = n as isize;
        for k in -2 * n..=2 * n {
            let lhs = shifted_sample(&r, &half, k);
            let rhs = shifted_sample(&up, &unit, 2 * k);
            prop_assert!((lhs - rhs).norm() <= 1e-12, "n = {k}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn total_energy_ignores_shift(seed: u64, n in even_n(), w in 0.01f64..=0.5) {
        let r = random_seq(seed, n);
        let base = total_energy(&r, &ShiftSpec::unshifted(w).unwrap());
        for tau in [0.3, 0.5, 1.7] {
            let e = total_energy(&r, &ShiftSpec::new(w, tau).unwrap());
            prop_assert!((e - base).abs() <= 1e-12 * base.max(1.0));
        }
    }

    #[test]
    fn upsampling_doubles_energy_at_half_band(seed: u64, n in even_n(), w in 0.01f64..=0.5, tau in -3.0f64..3.0) {
        let r = random_seq(seed, n);
        let up = r.upsample2();
        prop_assert!((up.energy() - r.energy()).abs() < 1e-14);
        let e = total_energy(&r, &ShiftSpec::new(w, tau).unwrap());
        let e_up = total_energy(&up, &ShiftSpec::new(w / 2.0, tau).unwrap());
        prop_assert!((e_up - 2.0 * e).abs() <= 1e-10);
    }

    #[test]
    fn full_band_preserves_energy(seed: u64, n in even_n(), tau in -5.0f64..5.0) {
        let r = random_seq(seed, n);
        let e = total_energy(&r, &ShiftSpec::new(0.5, tau).unwrap());
        prop_assert!((e - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn window_and_tail_partition_total(seed: u64, n in even_n(), w in 0.01f64..=0.5, tau in -2.0f64..2.0, l in 0usize..20, m in 0usize..20) {
        let r = random_seq(seed, n);
        let spec = ShiftSpec::new(w, tau).unwrap();
        let window = TailWindow::new(l, m);
        let tail = tail_energy_exact(&r, &spec, &window).unwrap();
        prop_assert!(tail.value >= 0.0);
        let sum = tail.value + window_energy(&r, &spec, &window);
        prop_assert!((sum - total_energy(&r, &spec)).abs() <= 1e-12 * sum.max(1.0));
    }
}

#[test]
fn full_band_unshifted_is_identity_on_support() {
    let r = random_seq(5, 8);
    let out = apply_shift(&r, &ShiftSpec::unshifted(0.5).unwrap(), -10..=10);
    for (k, v) in (-10..=10).zip(out) {
        assert_eq!(v, r.get(k));
    }
}

#[test]
fn dpss_member_energy_and_tail() {
    // s_l from (2N+1, W/2) has total energy λ_l/W² and tail λ_l(1−λ_l)/W²
    // under the unshifted B_{W/2}, with the kept window [−N, N].
    for (n, w) in [(4usize, 0.2), (8, 0.5), (6, 0.3)] {
        let set = compute_dpss(&DpssParams::new(2 * n + 1, w / 2.0).unwrap()).unwrap();
        let spec = ShiftSpec::unshifted(w / 2.0).unwrap();
        for l in 0..set.len() {
            let s = Sequence::from_real(set.vector(l)).unwrap();
            let lam = set.eigenvalue(l);
            let total = total_energy(&s, &spec);
            assert!((total - lam / (w * w)).abs() < 1e-12 / (w * w), "({n},{w}) l={l}");
            let tail = tail_energy_exact(&s, &spec, &TailWindow::new(n, n)).unwrap().value;
            let expected = lam * set.complement(l) / (w * w);
            assert!(
                (tail - expected).abs() < 1e-12 / (w * w),
                "({n},{w}) l={l}: {tail} vs {expected}"
            );
        }
    }
}

#[test]
fn impulse_half_sample_tail_via_truncated_sum() {
    let r = Sequence::impulse(2).unwrap();
    let spec = ShiftSpec::half_sample();
    let window = TailWindow::new(0, 1);
    let expected = 1.0 - 8.0 / (PI * PI);
    let exact = tail_energy_exact(&r, &spec, &window).unwrap().value;
    assert!((exact - expected).abs() < 1e-15);
    let truncated = tail_energy_truncated(&r, &spec, &window, 1e-10).unwrap();
    assert!((truncated.value - expected).abs() < 1e-9);
    assert_eq!(shifted_sample(&r, &spec, 0), Complex64::new(2.0 / PI, 0.0));
}

#[test]
fn truncated_oracle_agrees_with_gram_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let taus = [0.0, 0.5, 0.3, 1.7, -0.8];
    let ws = [0.1, 0.25, 0.4, 0.5, 0.17];
    for case in 0..100 {
        let n = 2 * (1 + case % 8);
        let r = unit_complex(&mut rng, n);
        let spec = ShiftSpec::new(ws[case % ws.len()], taus[(case / 5) % taus.len()]).unwrap();
        let window = TailWindow::new(n / 2 + case % 3, n / 2 + case % 2);
        let tol = 1e-10;
        let exact = tail_energy_exact(&r, &spec, &window).unwrap().value;
        let truncated = tail_energy_truncated(&r, &spec, &window, tol).unwrap();
        assert!(
            (exact - truncated.value).abs() <= tol.max(1e-9),
            "case {case}: exact {exact}, truncated {} at H = {}",
            truncated.value,
            truncated.horizon
        );
        assert!(truncated.remainder_bound < tol);
    }
}

#[test]
fn upsampled_energy_on_support() {
    let r = Sequence::from_real(&[1.0, 2.0, 3.0]).unwrap();
    let up = r.upsample2();
    assert_eq!(up.n(), 4);
    let expected = [1.0, 0.0, 2.0, 0.0, 3.0];
    for (k, v) in up.iter() {
        assert_eq!(v.re, expected[(k + 2) as usize]);
    }
}
