//! Series and integrals built from ψ and its derivatives.

use std::f64::consts::{LN_2, PI};

use super::helpers::{each, finite, oscillatory, series, slow_tail_integral, Entry};
use super::IdentityRecord;
use crate::quadrature::{AccelMode, OscillatoryKernel, SingularEndpoints};
use crate::special_functions::{
    digamma, log_barnes_g, log_gamma, polygamma, ValueOrNan, EULER_GAMMA,
};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

fn psi(x: f64) -> f64 {
    digamma(x).val()
}

fn psi1(x: f64) -> f64 {
    polygamma(1, x).val()
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    vec![
        ramanujan_cosine(),
        integral_shifted_log(),
        integral_general_t(),
        integral_log_u(),
        binet_series(),
        half_odd_series(),
        trigamma_series(),
        trigamma_mixed_series(),
        tetragamma_series(),
        log_one_plus_series(),
        log_power_series(),
        half_shift_series(),
        guinand(),
        alexeiewsky(),
    ]
}

fn ramanujan_cosine() -> IdentityRecord {
    const T: [f64; 3] = [1.0, 2.0, 0.6];
    Entry::claimed(
        "I-3.4.2",
        1e-7,
        "int_0^inf [psi(1+u) - log u] cos(2 pi t u) du = (1/2)[psi(1+t) - log t]",
    )
    .reference("Ramanujan")
    .samples(["t = 1", "t = 2", "t = 0.6"])
    .rationale(
        "oscillatory quadrature with a logarithmic singularity at u = 0 and 1/u amplitude decay",
    )
    .sides(
        |ctx| {
            each(&T, |t| {
                let f = |u: f64| psi(1.0 + u) - u.ln();
                oscillatory(ctx, f, OscillatoryKernel::cosine(2.0 * PI * t), ctx.tol)
            })
        },
        |_| each(&T, |t| Ok(0.5 * (digamma(1.0 + t)?.value - t.ln()))),
    )
}

fn integral_shifted_log() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.3",
        1e-8,
        "int_0^inf [psi(1+u) - log(1+u) + 1/(2(1+u))] du = (1/2) log 2pi - 1",
    )
    .rationale("integrand ~ 1/(12u²) with cancellation; finite quadrature to X and Richardson in X")
    .sides(
        |ctx| {
            let f = |u: f64| psi(1.0 + u) - u.ln_1p() + 0.5 / (1.0 + u);
            Ok(vec![slow_tail_integral(ctx, f, false)?])
        },
        |_| Ok(vec![0.5 * LN_2PI - 1.0]),
    )
}

fn integral_general_t() -> IdentityRecord {
    const T: [f64; 2] = [0.5, 2.0];
    Entry::claimed(
        "I-3.4.7",
        1e-8,
        "int_0^inf [psi(t+u) - log(t+u) + 1/(2(t+u))] du = (t - 1/2) log t - t + (1/2) log 2pi - log Gamma(t)",
    )
    .samples(["t = 1/2", "t = 2"])
    .rationale("as for the t = 1 case: finite quadrature to X and Richardson in X")
    .sides(
        |ctx| {
            each(&T, |t| {
                let f = |u: f64| psi(t + u) - (t + u).ln() + 0.5 / (t + u);
                slow_tail_integral(ctx, f, false)
            })
        },
        |_| each(&T, |t| Ok((t - 0.5) * t.ln() - t + 0.5 * LN_2PI - log_gamma(t)?.value)),
    )
}

fn integral_log_u() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.9",
        1e-8,
        "int_0^inf [psi(1+u) - log u - 1/(2(1+u))] du = (1/2) log 2pi",
    )
    .reference("Berndt and Dixit")
    .rationale("logarithmic singularity at 0 and 1/u² tail; flagged endpoint plus Richardson in X")
    .sides(
        |ctx| {
            let f = |u: f64| psi(1.0 + u) - u.ln() - 0.5 / (1.0 + u);
            Ok(vec![slow_tail_integral(ctx, f, true)?])
        },
        |_| Ok(vec![0.5 * LN_2PI]),
    )
}

fn binet_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.15",
        1e-8,
        "sum_{n>=1} [psi(n) - log n + 1/(2n)] = (1/2)[1 + gamma - log 2pi]",
    )
    .rationale("terms ~ −1/(12n²), Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64;
                psi(x) - x.ln() + 0.5 / x
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![0.5 * (1.0 + EULER_GAMMA - LN_2PI)]),
    )
}

fn half_odd_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.16",
        1e-8,
        "sum_{n>=0} [psi(1+n) + log 2 - log(2n+1)] = (1/2)[1 - log 2]",
    )
    .rationale("terms ~ 1/n², Richardson after the n = 0 term")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64;
                psi(1.0 + x) + LN_2 - (2.0 * x + 1.0).ln()
            };
            let first = -EULER_GAMMA + LN_2;
            Ok(vec![first + series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![0.5 * (1.0 - LN_2)]),
    )
}

fn trigamma_series() -> IdentityRecord {
    Entry::claimed("I-3.4.23", 1e-9, "sum_{n>=1} [psi'(n) - 1/n] = 1")
        .rationale("terms ~ 1/(2n²), Richardson")
        .sides(
            |ctx| {
                let t = |n: usize| psi1(n as f64) - 1.0 / n as f64;
                Ok(vec![series(ctx, AccelMode::Richardson, t)?])
            },
            |_| Ok(vec![1.0]),
        )
}

fn trigamma_mixed_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.24",
        1e-8,
        "sum_{n>=1} [psi(n) - log n + (1/2) psi'(n)] = 1 + gamma/2 - (1/2) log 2pi",
    )
    .reference("Srivastava and Choi")
    .rationale("terms ~ 1/(6n²), Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64;
                psi(x) - x.ln() + 0.5 * psi1(x)
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![1.0 + 0.5 * EULER_GAMMA - 0.5 * LN_2PI]),
    )
}

fn tetragamma_series() -> IdentityRecord {
    const X: [f64; 3] = [0.5, 1.0, 2.0];
    Entry::claimed(
        "I-3.4.25",
        1e-8,
        "sum_{n>=1} psi''(x+n) = -x psi''(x) - 2 psi'(x)",
    )
    .reference("Merkle")
    .samples(["x = 1/2", "x = 1", "x = 2"])
    .rationale("terms ~ −1/n², Richardson")
    .sides(
        |ctx| {
            each(&X, |x| {
                series(ctx, AccelMode::Richardson, |n| {
                    polygamma(2, x + n as f64).val()
                })
            })
        },
        |_| {
            each(&X, |x| {
                Ok(-x * polygamma(2, x)?.value - 2.0 * polygamma(1, x)?.value)
            })
        },
    )
}

fn log_one_plus_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.31",
        1e-8,
        "sum_{n>=1} [log n + n log(1 + 1/n) - psi(n) - 1] = 1/2",
    )
    .rationale("terms ~ 5/(12n²), Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64;
                x.ln() + x * (1.0 / x).ln_1p() - psi(x) - 1.0
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![0.5]),
    )
}

fn log_power_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.32",
        1e-8,
        "sum_{n>=1} [n log(1 + 1/n) + 1/(2n) - 1] = 1 + gamma/2 - (1/2) log 2pi",
    )
    .rationale("terms ~ 1/(3n²), Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64;
                x * (1.0 / x).ln_1p() + 0.5 / x - 1.0
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![1.0 + 0.5 * EULER_GAMMA - 0.5 * LN_2PI]),
    )
}

fn half_shift_series() -> IdentityRecord {
    Entry::claimed(
        "I-3.4.33",
        1e-8,
        "sum_{n>=1} [psi(n + 1/2) - log n] = gamma/2 + (1/2) log(2/pi)",
    )
    .rationale("terms ~ 1/(24n²), Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| psi(n as f64 + 0.5) - (n as f64).ln();
            Ok(vec![series(ctx, AccelMode::Richardson, t)?])
        },
        |_| Ok(vec![0.5 * EULER_GAMMA + 0.5 * (2.0 / PI).ln()]),
    )
}

fn guinand() -> IdentityRecord {
    const Z: f64 = 2.0;
    Entry::claimed(
        "I-3.4.35",
        1e-6,
        "sum_{n>=1} [psi(1+nz) - log(nz) - 1/(2nz)] + (gamma - log(2 pi z))/(2z) = (1/z) sum_{n>=1} [psi(1+n/z) - log(n/z) - z/(2n)] + (gamma - log(2 pi/z))/2 at z = 2",
    )
    .reference("Guinand")
    .rationale("both sides are 1/n² series, Richardson")
    .sides(
        |ctx| {
            let t = |n: usize| {
                let x = n as f64 * Z;
                psi(1.0 + x) - x.ln() - 0.5 / x
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)? + (EULER_GAMMA - (2.0 * PI * Z).ln()) / (2.0 * Z)])
        },
        |ctx| {
            let t = |n: usize| {
                let x = n as f64 / Z;
                psi(1.0 + x) - x.ln() - 0.5 / x
            };
            Ok(vec![series(ctx, AccelMode::Richardson, t)? / Z + 0.5 * (EULER_GAMMA - (2.0 * PI / Z).ln())])
        },
    )
}

fn alexeiewsky() -> IdentityRecord {
    const X: [f64; 2] = [0.5, 1.5];
    Entry::claimed(
        "I-3.4.36",
        1e-9,
        "log G(1+x) = (x/2) log 2pi - x(1+x)/2 + x log Gamma(1+x) - int_0^x log Gamma(1+t) dt",
    )
    .reference("Alexeiewsky")
    .samples(["x = 1/2", "x = 3/2"])
    .rationale("left side from the Barnes product series, right side by quadrature of log Γ")
    .sides(
        |_| each(&X, |x| Ok(log_barnes_g(1.0 + x)?.value)),
        |ctx| {
            each(&X, |x| {
                let i = finite(
                    ctx,
                    |t| log_gamma(1.0 + t).val(),
                    0.0,
                    x,
                    SingularEndpoints::NONE,
                )?;
                Ok(0.5 * x * LN_2PI - 0.5 * x * (1.0 + x) + x * log_gamma(1.0 + x)?.value - i)
            })
        },
    )
}
