//! Identities tied to the Abel–Plana and Poisson formulas, plus the
//! Hardy-type limits for Σ k log k.

use std::f64::consts::PI;

use super::helpers::{each, semiinf, series, Entry};
use super::{Ctx, IdentityRecord};
use crate::error::Result;
use crate::quadrature::AccelMode;
use crate::special_functions::hurwitz_zeta_deriv;
use crate::summation_engines::{regularized_limit, LimitLadder, LimitModel};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

pub(super) fn entries() -> Vec<IdentityRecord> {
    vec![
        partial_fractions(),
        legendre(),
        adamchik(),
        hardy_brackets(),
    ]
}

fn partial_fractions() -> IdentityRecord {
    const A: [f64; 3] = [0.5, 1.0, 3.0];
    Entry::claimed(
        "I-3.6.9",
        1e-10,
        "2 sum_{n>=1} a/(a^2 + 4 pi^2 n^2) = 1/(e^a - 1) - 1/a + 1/2",
    )
    .samples(["a = 1/2", "a = 1", "a = 3"])
    .rationale("terms ~ a/(4π²n²); Richardson removes the 1/N tail expansion")
    .sides(
        |ctx| {
            each(&A, |a| {
                let t = |n: usize| a / (a * a + 4.0 * PI * PI * (n * n) as f64);
                Ok(2.0 * series(ctx, AccelMode::Richardson, t)?)
            })
        },
        |_| each(&A, |a| Ok(1.0 / a.exp_m1() - 1.0 / a + 0.5)),
    )
}

fn legendre() -> IdentityRecord {
    const A: [f64; 3] = [0.5, 1.0, 4.0];
    Entry::claimed(
        "I-3.6.10",
        1e-10,
        "2 int_0^inf sin(a x)/(e^{2 pi x} - 1) dx = (1/2) coth(a/2) - 1/a",
    )
    .reference("Legendre")
    .samples(["a = 1/2", "a = 1", "a = 4"])
    .rationale("exponentially decaying integrand with a removable singularity at 0")
    .sides(
        |ctx| {
            each(&A, |a| {
                Ok(2.0 * semiinf(ctx, |x| (a * x).sin() / (2.0 * PI * x).exp_m1(), 0.0)?)
            })
        },
        |_| each(&A, |a| Ok(0.5 / (0.5 * a).tanh() - 1.0 / a)),
    )
}

fn adamchik_integral(ctx: &Ctx) -> Result<f64> {
    semiinf(ctx, |x| x * (x * x).ln_1p() / (2.0 * PI * x).exp_m1(), 0.0)
}

fn adamchik_closed_form() -> Result<f64> {
    Ok(hurwitz_zeta_deriv(1, -1.0, 1.0)?.value - 0.75 + 0.5 * LN_2PI)
}

fn adamchik() -> IdentityRecord {
    Entry::claimed(
        "I-3.6.15",
        1e-7,
        "int_0^inf x log(1 + x^2)/(e^{2 pi x} - 1) dx = zeta'(-1) - 3/4 + (1/2) log 2pi",
    )
    .reference("Adamchik")
    .rationale("exponentially decaying integrand; ζ′(−1) from the Euler–Maclaurin s-derivative")
    .sides(
        |ctx| Ok(vec![adamchik_integral(ctx)?]),
        |_| Ok(vec![adamchik_closed_form()?]),
    )
}

/// −Σ_{k≤N} (k−1) log k.
fn weighted_log_sum(n: usize) -> f64 {
    -(2..=n)
        .map(|k| (k - 1) as f64 * (k as f64).ln())
        .sum::<f64>()
}

/// Limit of −Σ(k−1)log k + (N²/2 − N/2 − 5/12) log N + N − N²/4 + 2/3.
fn second_bracket(ladder: &LimitLadder) -> Result<f64> {
    let growth = |n: usize| {
        let x = n as f64;
        -((0.5 * x * x - 0.5 * x - 5.0 / 12.0) * x.ln() + x - 0.25 * x * x + 2.0 / 3.0)
    };
    Ok(regularized_limit(weighted_log_sum, growth, ladder)?.value)
}

/// The first bracket, −Σ(k−1)log k + ½(N² − N − ¾) log N + N − N²/4 − 5/8,
/// at a single N.
fn first_bracket(n: usize) -> f64 {
    let x = n as f64;
    weighted_log_sum(n) + 0.5 * (x * x - x - 0.75) * x.ln() + x - 0.25 * x * x - 0.625
}

/// Finite part of the first bracket after removing its (1/24) log N drift.
fn first_bracket_finite_part(ladder: &LimitLadder) -> Result<f64> {
    let growth = |n: usize| {
        let x = n as f64;
        -(0.5 * (x * x - x - 0.75) * x.ln() + x - 0.25 * x * x - 0.625) + x.ln() / 24.0
    };
    Ok(regularized_limit(weighted_log_sum, growth, ladder)?.value)
}

fn hardy_brackets() -> IdentityRecord {
    Entry::disputed(
        "I-3.6.13v14",
        "two Hardy-type limits for -sum (k-1) log k, each claimed to equal int_0^inf x log(1+x^2)/(e^{2 pi x} - 1) dx = zeta'(-1) - 3/4 + (1/2) log 2pi",
    )
    .reference("Hardy; Adamchik")
    .rationale(
        "lhs is the limit of the bracket with (N²/2 − N/2 − 5/12) log N + N − N²/4 + 2/3, \
         rhs the integral; the bracket with ½(N² − N − ¾) log N + N − N²/4 − 5/8 grows like (1/24) log N",
    )
    .annotate(|_, l, r| {
        let ladder = LimitLadder::new(16, 5, LimitModel::Poly);
        let closed = adamchik_closed_form().unwrap_or(f64::NAN);
        let finite = first_bracket_finite_part(&ladder).unwrap_or(f64::NAN);
        let drift = first_bracket(1024) - first_bracket(512);
        format!(
            "second bracket {:.12} vs integral {:.12}: difference {:.12} (4/3 = {:.12}); \
             integral minus closed form {:.3e}; first bracket drifts {:.6e} per doubling of N \
             ((1/24) log 2 = {:.6e}), finite part after removing (1/24) log N is {:.12}, \
             {:.12} from the second bracket",
            l[0],
            r[0],
            l[0] - r[0],
            4.0 / 3.0,
            r[0] - closed,
            drift,
            std::f64::consts::LN_2 / 24.0,
            finite,
            finite - l[0],
        )
    })
    .sides(
        |_| Ok(vec![second_bracket(&LimitLadder::new(16, 5, LimitModel::Poly))?]),
        |ctx| Ok(vec![adamchik_integral(ctx)?]),
    )
}
