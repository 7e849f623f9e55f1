use std::f64::consts::PI;

use proptest::prelude::*;
use summa_core::quadrature::{
    accelerate_series, integrate_finite, integrate_oscillatory_semiinf, integrate_semiinf_decay,
    AccelMode, OscillatoryKernel, SingularEndpoints,
};
use summa_core::special_functions::{
    cosine_integral, digamma, hurwitz_zeta, hurwitz_zeta_deriv, log_gamma, polygamma,
    shifted_sine_integral, sine_integral, stieltjes_gamma,
};

fn psi(x: f64) -> f64 {
    digamma(x).unwrap().value
}

fn zeta(s: f64, a: f64) -> f64 {
    hurwitz_zeta(s, a).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shifted_sine_integral_offset(x in 1e-3f64..200.0) {
        let d = shifted_sine_integral(x).unwrap().value - sine_integral(x).unwrap().value + PI / 2.0;
        prop_assert!(d.abs() <= 1e-13, "x = {x}: {d:e}");
    }

    #[test]
    fn digamma_recurrence(x in 1e-3f64..50.0) {
        let d = psi(1.0 + x) - psi(x) - 1.0 / x;
        prop_assert!(d.abs() <= 1e-12 * (1.0 + 1.0 / x), "x = {x}: {d:e}");
    }

    #[test]
    fn digamma_reflection(x in 0.01f64..0.99) {
        let d = psi(x) - psi(1.0 - x) + PI / (PI * x).tan();
        prop_assert!(d.abs() <= 1e-11, "x = {x}: {d:e}");
    }

    #[test]
    fn polygamma_hurwitz_bridge(p in 1u32..5, x in 0.1f64..20.0) {
        let fact: f64 = (1..=p).map(f64::from).product();
        let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
        let want = sign * fact * zeta(f64::from(p) + 1.0, x);
        let got = polygamma(p, x).unwrap().value;
        prop_assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0), "p = {p}, x = {x}: {got} vs {want}");
    }

    #[test]
    fn zeta_derivative_matches_central_difference(
        s in prop_oneof![-2.5f64..-0.25, 2.25f64..3.5],
        a in 0.5f64..3.0,
    ) {
        // away from the pole, where the h²ζ‴/6 truncation of the difference stays below 1e-6
        let h = 1e-3;
        let fd = (zeta(s + h, a) - zeta(s - h, a)) / (2.0 * h);
        let d = hurwitz_zeta_deriv(1, s, a).unwrap().value;
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs().max(1.0), "s = {s}, a = {a}: {fd} vs {d}");
    }

    #[test]
    fn finite_interval_additivity(c in 0.05f64..0.95, k in 0.5f64..6.0) {
        let f = |x: f64| (k * x).sin() * (-x).exp() + x.sqrt();
        let sing = SingularEndpoints::NONE;
        let whole = integrate_finite(f, 0.0, 1.0, 1e-12, sing).unwrap();
        let left = integrate_finite(f, 0.0, c, 1e-12, sing).unwrap();
        let right = integrate_finite(f, c, 1.0, 1e-12, sing).unwrap();
        let d = (left.value + right.value - whole.value).abs();
        prop_assert!(d <= whole.abs_err + left.abs_err + right.abs_err + 1e-14, "{d:e}");
    }

    #[test]
    fn finite_linearity(alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
        let f = |x: f64| x.cos();
        let g = |x: f64| 1.0 / (1.0 + x * x);
        let sing = SingularEndpoints::NONE;
        let rf = integrate_finite(f, 0.0, 2.0, 1e-12, sing).unwrap();
        let rg = integrate_finite(g, 0.0, 2.0, 1e-12, sing).unwrap();
        let rc = integrate_finite(|x| alpha * f(x) + beta * g(x), 0.0, 2.0, 1e-12, sing).unwrap();
        let d = (rc.value - alpha * rf.value - beta * rg.value).abs();
        let bound = rc.abs_err + alpha.abs() * rf.abs_err + beta.abs() * rg.abs_err + 1e-14;
        prop_assert!(d <= bound, "{d:e} > {bound:e}");
    }

    #[test]
    fn oscillatory_matches_decay_quadrature(w in 0.5f64..8.0) {
        let osc = integrate_oscillatory_semiinf(|x: f64| (-x).exp(), OscillatoryKernel::cosine(w), 0.0, 1e-12).unwrap();
        let direct = integrate_semiinf_decay(|x: f64| (-x).exp() * (w * x).cos(), 0.0, 1e-12).unwrap();
        prop_assert!((osc.value - direct.value).abs() <= 1e-10, "{} vs {}", osc.value, direct.value);
    }
}

#[test]
fn hurwitz_forward_difference() {
    for s in [-2.5, -0.5, 0.5, 3.0] {
        for a in [0.3, 1.0, 2.0] {
            let d = zeta(s, a) - zeta(s, a + 1.0) - a.powf(-s);
            assert!(d.abs() <= 1e-11, "s = {s}, a = {a}: {d:e}");
        }
    }
}

#[test]
fn stieltjes_difference_equation() {
    for p in 1..=3u32 {
        for a in [0.5f64, 1.0, 2.0] {
            let d = stieltjes_gamma(p, 1.0 + a).unwrap().value
                - stieltjes_gamma(p, a).unwrap().value
                + a.ln().powi(p as i32) / a;
            assert!(d.abs() <= 1e-8, "p = {p}, a = {a}: {d:e}");
        }
    }
}

#[test]
fn digamma_matches_trig_integral_series() {
    for a in [0.25, 1.0 / 3.0, 1.0, 2.6] {
        let term = |n: usize| {
            let x = 2.0 * PI * n as f64 * a;
            let (s, c) = x.sin_cos();
            c * cosine_integral(x).unwrap().value + s * shifted_sine_integral(x).unwrap().value
        };
        let sum = accelerate_series(term, AccelMode::Richardson, 1e-11)
            .unwrap()
            .value;
        let series = a.ln() - 0.5 / a + 2.0 * sum;
        assert!(
            (psi(a) - series).abs() <= 1e-8,
            "a = {a}: {} vs {series}",
            psi(a)
        );
    }
}

#[test]
fn hurwitz_derivative_at_zero_is_log_gamma() {
    let half_log_2pi = 0.5 * (2.0 * PI).ln();
    for a in [1.0 / 3.0, 1.0, 2.5] {
        let d = hurwitz_zeta_deriv(1, 0.0, a).unwrap().value;
        let want = log_gamma(a).unwrap().value - half_log_2pi;
        assert!((d - want).abs() <= 1e-9, "a = {a}: {d} vs {want}");
    }
}
