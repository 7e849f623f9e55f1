use std::f64::consts::PI;

use num_complex::Complex64;
use summa_core::identity_catalog::{verify_all, IdentityStatus};
use summa_core::quadrature::{accelerate_series, integrate_semiinf_decay, AccelMode};
use summa_core::summation_engines::{
    abel_plana, poisson_alternating, poisson_semiinf, regularized_limit, Analytic, LimitLadder,
    LimitModel,
};

#[test]
fn poisson_and_abel_plana_agree_on_exponentials() {
    for a in [1.0, 2.5] {
        let p = poisson_semiinf(move |x: f64| (-a * x).exp(), 64, 1e-12).unwrap();
        let ap = abel_plana(&Analytic(move |z: Complex64| (-a * z).exp()), 1e-12).unwrap();
        // ½f(0) + Σ_{n≥1} f(n)
        let exact = 1.0 / (1.0 - (-a).exp()) - 0.5;
        assert!(p.residual <= 1e-9 && ap.residual <= 1e-9, "{p:?} {ap:?}");
        assert!((p.rhs.value - ap.rhs.value).abs() <= 1e-8, "{p:?} {ap:?}");
        assert!((p.lhs.value - exact).abs() <= 1e-12);
    }
}

#[test]
fn alternating_equals_even_minus_all() {
    let f = |x: f64| (-x).exp();
    let r = poisson_alternating(f, 64, 1e-12).unwrap();
    // both sides carry the half weight at n = 0
    let all = 1.0 / (1.0 - (-1.0f64).exp()) - 0.5;
    let even = 1.0 / (1.0 - (-2.0f64).exp()) - 0.5;
    assert!((r.lhs.value - (2.0 * even - all)).abs() <= 1e-10, "{r:?}");
}

#[test]
fn partial_fractions_with_analytic_tail() {
    const N: usize = 10_000;
    for a in [0.5f64, 1.0, 3.0] {
        let head: f64 = (1..=N)
            .rev()
            .map(|n| a / (a * a + 4.0 * PI * PI * (n * n) as f64))
            .sum();
        // Σ_{n>N} 1/n² = 1/N − 1/(2N²) + O(N⁻³)
        let x = N as f64;
        let tail = a / (4.0 * PI * PI) * (1.0 / x - 0.5 / (x * x));
        let want = 1.0 / a.exp_m1() - 1.0 / a + 0.5;
        assert!(
            (2.0 * (head + tail) - want).abs() <= 1e-10,
            "a = {a}: {:e}",
            2.0 * (head + tail) - want
        );
    }
}

#[test]
fn legendre_relation() {
    for a in [0.5f64, 1.0, 4.0] {
        let i =
            integrate_semiinf_decay(|x: f64| (a * x).sin() / (2.0 * PI * x).exp_m1(), 0.0, 1e-13)
                .unwrap();
        let want = 0.5 / (0.5 * a).tanh() - 1.0 / a;
        assert!(
            (2.0 * i.value - want).abs() <= 1e-10,
            "a = {a}: {}",
            2.0 * i.value
        );
    }
}

#[test]
fn zeta_prime_zero_from_stirling_limit() {
    // Σ_{k≤N} log k − (N + ½) log N + N → ½ log 2π, and ζ′(0) = −½ log 2π
    let partial = |n: usize| (1..=n).map(|k| (k as f64).ln()).sum::<f64>();
    let growth = |n: usize| {
        let x = n as f64;
        (x + 0.5) * x.ln() - x
    };
    let r = regularized_limit(partial, growth, &LimitLadder::new(16, 5, LimitModel::Poly)).unwrap();
    let want = -0.5 * (2.0 * PI).ln();
    assert!((-r.value - want).abs() <= 1e-8, "{}", r.value);
}

#[test]
fn abel_plana_matches_accelerated_sum() {
    // ½ + Σ_{n≥1} 1/(1+n)² = π²/6 − ½
    let ap = abel_plana(
        &Analytic(|z: Complex64| 1.0 / ((1.0 + z) * (1.0 + z))),
        1e-11,
    )
    .unwrap();
    let direct = 0.5
        + accelerate_series(
            |n| 1.0 / ((1 + n) * (1 + n)) as f64,
            AccelMode::Richardson,
            1e-12,
        )
        .unwrap()
        .value;
    assert!((ap.rhs.value - direct).abs() <= 1e-9, "{ap:?} vs {direct}");
    assert!((direct - (PI * PI / 6.0 - 0.5)).abs() <= 1e-10);
}

#[test]
fn engines_are_deterministic_across_thread_counts() {
    let run = || {
        let p = poisson_semiinf(|x: f64| 1.0 / (1.0 + x * x), 256, 1e-10).unwrap();
        (p.lhs.value.to_bits(), p.rhs.value.to_bits(), p.n_modes)
    };
    let serial = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(run);
    let wide = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(run);
    assert_eq!(serial, wide);
    assert_eq!(run(), run());
}

#[test]
fn catalog_is_deterministic_under_parallel_verification() {
    let (serial, _) = verify_all(Some("I-3.4"), false);
    let (par, _) = verify_all(Some("I-3.4"), true);
    assert_eq!(serial.len(), par.len());
    for (s, p) in serial.iter().zip(&par) {
        assert_eq!(s.id, p.id);
        assert_eq!(s.lhs_value.to_bits(), p.lhs_value.to_bits(), "{}", s.id);
        assert_eq!(s.rhs_value.to_bits(), p.rhs_value.to_bits(), "{}", s.id);
        assert_eq!(s.passed, p.passed);
        assert!(s.status == IdentityStatus::Claimed);
    }
}
