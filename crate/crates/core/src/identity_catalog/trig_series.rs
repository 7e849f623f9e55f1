//! Series over sine and cosine integrals, and two classical Fourier and
//! product expansions.

use std::f64::consts::PI;

use super::helpers::{each, fourier, series, Entry};
use super::IdentityRecord;
use crate::quadrature::AccelMode;
use crate::special_functions::{
    cosine_integral, digamma, hurwitz_zeta, hurwitz_zeta_deriv, log_gamma, shifted_sine_integral,
    ValueOrNan, EULER_GAMMA,
};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// cos x · Ci(x) + sin x · si(x).
fn aux_g(x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    c * cosine_integral(x).val() + s * shifted_sine_integral(x).val()
}

/// sin x · Ci(x) − cos x · si(x).
fn aux_f(x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    s * cosine_integral(x).val() - c * shifted_sine_integral(x).val()
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    vec![
        digamma_series(),
        ci_lattice(),
        log_gamma_series(),
        si_lattice(),
        si_alternating(),
        ci_inverse_square(),
        fourier_sine(),
        sine_product(),
    ]
}

fn digamma_series() -> IdentityRecord {
    const A: [f64; 4] = [0.25, 1.0 / 3.0, 1.0, 2.0];
    Entry::claimed(
        "I-3.1.7",
        1e-7,
        "psi(a) = log a - 1/(2a) + 2 sum_{n>=1} [cos(2n pi a) Ci(2n pi a) + sin(2n pi a) si(2n pi a)]",
    )
    .reference("Nörlund")
    .samples(["a = 1/4", "a = 1/3", "a = 1", "a = 2"])
    .rationale("terms decay like 1/n² without sign change; Richardson on up to 8192 terms limits accuracy to about 1e-9")
    .sides(
        |_| each(&A, |a| Ok(digamma(a)?.value)),
        |ctx| {
            each(&A, |a| {
                let s = series(ctx, AccelMode::Richardson, |n| aux_g(2.0 * PI * n as f64 * a))?;
                Ok(a.ln() - 0.5 / a + 2.0 * s)
            })
        },
    )
}

fn ci_lattice() -> IdentityRecord {
    Entry::claimed("I-3.1.8", 1e-8, "sum_{n>=1} Ci(2n pi) = (1/2 - gamma)/2")
        .reference("Nielsen (corrected)")
        .rationale("Ci(2nπ) ~ −1/(2nπ)², summed by Richardson")
        .sides(
            |ctx| {
                Ok(vec![series(ctx, AccelMode::Richardson, |n| {
                    cosine_integral(2.0 * PI * n as f64).val()
                })?])
            },
            |_| Ok(vec![0.5 * (0.5 - EULER_GAMMA)]),
        )
}

fn log_gamma_series() -> IdentityRecord {
    const A: [f64; 3] = [0.25, 0.75, 1.5];
    Entry::claimed(
        "I-3.2.2",
        1e-7,
        "log Gamma(a) = (1/2) log 2pi + (a - 1/2) log a - a + (1/pi) sum_{n>=1} [sin(2n pi a) Ci(2n pi a) - cos(2n pi a) si(2n pi a)]/n",
    )
    .reference("Kummer-type series")
    .samples(["a = 1/4", "a = 3/4", "a = 3/2"])
    .rationale("terms decay like 1/n², Richardson")
    .sides(
        |_| each(&A, |a| Ok(log_gamma(a)?.value)),
        |ctx| {
            each(&A, |a| {
                let s = series(ctx, AccelMode::Richardson, |n| aux_f(2.0 * PI * n as f64 * a) / n as f64)?;
                Ok(0.5 * LN_2PI + (a - 0.5) * a.ln() - a + s / PI)
            })
        },
    )
}

fn si_lattice() -> IdentityRecord {
    Entry::claimed(
        "I-3.2.3",
        1e-8,
        "sum_{n>=1} si(2n pi)/(n pi) = (1/2) log 2pi - 1",
    )
    .reference("Nielsen")
    .rationale("si(2nπ) ~ −1/(2nπ), terms ~ 1/n², Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| shifted_sine_integral(2.0 * PI * n as f64).val() / (n as f64 * PI);
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![0.5 * LN_2PI - 1.0]),
    )
}

fn si_alternating() -> IdentityRecord {
    Entry::claimed(
        "I-3.2.4",
        1e-8,
        "sum_{n>=1} (-1)^n si(n pi)/(n pi) = -(1/2)(1 - log 2)",
    )
    .reference("log-gamma series at a = 1/2")
    .rationale(
        "every term is negative, so the sum cannot equal the positive +(1/2)(1 - log 2); \
             the sign follows from the log-gamma series at a = 1/2",
    )
    .annotate(|_, l, _| {
        let printed = 0.5 * (1.0 - std::f64::consts::LN_2);
        format!(
            "positive-sign form misses by {:.3e}",
            (l[0] - printed).abs()
        )
    })
    .sides(
        |ctx| {
            let t = |n: usize| {
                let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * shifted_sine_integral(n as f64 * PI).val() / (n as f64 * PI)
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![-0.5 * (1.0 - std::f64::consts::LN_2)]),
    )
}

fn ci_inverse_square() -> IdentityRecord {
    Entry::claimed(
        "I-3.3.1",
        1e-7,
        "sum_{n>=1} Ci(2n pi)/n^2 = zeta(2)[gamma + log 2pi] - zeta'(2) - pi^2/2",
    )
    .rationale("terms ~ 1/n⁴, Richardson; ζ′(2) from the Euler–Maclaurin s-derivative")
    .sides(
        |ctx| {
            let t = |n: usize| cosine_integral(2.0 * PI * n as f64).val() / (n * n) as f64;
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| {
            let z2 = hurwitz_zeta(2.0, 1.0)?.value;
            let dz2 = hurwitz_zeta_deriv(1, 2.0, 1.0)?.value;
            Ok(vec![z2 * (EULER_GAMMA + LN_2PI) - dz2 - PI * PI / 2.0])
        },
    )
}

fn fourier_sine() -> IdentityRecord {
    const A: [f64; 2] = [1.0, 2.0];
    Entry::claimed(
        "I-fourier-sin",
        1e-8,
        "sum_{n>=1} sin(n a)/n = (pi - a)/2 for 0 < a < 2pi",
    )
    .samples(["a = 1", "a = 2"])
    .rationale("conditionally convergent; iterated Aitken on the complex partial sums of e^{ina}/n")
    .sides(
        |ctx| each(&A, |a| Ok(fourier(ctx, a, |n| 1.0 / n as f64)?.im)),
        |_| each(&A, |a| Ok(0.5 * (PI - a))),
    )
}

fn sine_product() -> IdentityRecord {
    const A: f64 = 0.3;
    Entry::claimed(
        "I-sine-product",
        1e-9,
        "log sin(pi a) = log(pi a) + sum_{n>=1} log((n^2 - a^2)/n^2) at a = 0.3",
    )
    .reference("Euler")
    .rationale("terms ~ −a²/n², Richardson")
    .sides(
        |_| Ok(vec![(PI * A).sin().ln()]),
        |ctx| {
            let t = |n: usize| (-(A * A) / (n * n) as f64).ln_1p();
            Ok(vec![(PI * A).ln() + series(ctx, AccelMode::Richardson, t)?])
        },
    )
}
