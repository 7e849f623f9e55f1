//! Integrals against cot, with Bernoulli-polynomial and log-gamma weights.

use std::f64::consts::{PI, SQRT_2};

use super::helpers::{finite, series, Entry};
use super::IdentityRecord;
use crate::quadrature::{AccelMode, SingularEndpoints};
use crate::special_functions::{
    bernoulli_poly, catalan, cosine_integral, hurwitz_zeta, log_gamma, ValueOrNan,
};

pub(super) fn entries() -> Vec<IdentityRecord> {
    vec![
        bernoulli_cot(),
        bernoulli_log_gamma(),
        cot_pi6(),
        cot_pi8(),
        log_gamma_cot(),
    ]
    .into_iter()
    .flatten()
    .collect()
}

fn zeta(s: f64) -> f64 {
    hurwitz_zeta(s, 1.0).val()
}

fn bernoulli_cot() -> Vec<IdentityRecord> {
    // (id, odd order, 2·(2n+1)!·(−1)^{n+1})
    const CASES: [(&str, usize, f64); 2] = [("I-4.10-n1", 3, 12.0), ("I-4.10-n2", 5, -240.0)];
    CASES
        .iter()
        .map(|&(id, k, c)| {
            Entry::claimed(
                id,
                1e-8,
                &format!("int_0^1 B_{k}(x) cot(pi x) dx = {c} zeta({k})/(2 pi)^{k}"),
            )
            .reference("Abramowitz and Stegun")
            .rationale("B_k vanishes at both ends, so the integrand is bounded; endpoints flagged to avoid cot at 0 and 1")
            .sides(
                move |ctx| {
                    let f = |x: f64| bernoulli_poly(k, x).unwrap_or(f64::NAN) / (PI * x).tan();
                    Ok(vec![finite(ctx, f, 0.0, 1.0, SingularEndpoints::BOTH)?])
                },
                move |_| Ok(vec![c * zeta(k as f64) / (2.0 * PI).powi(k as i32)]),
            )
        })
        .collect()
}

fn bernoulli_log_gamma() -> Vec<IdentityRecord> {
    let printed = |z3: f64| z3 / (8.0 * PI.powi(3));
    vec![Entry::claimed(
        "I-4.12-n1",
        1e-8,
        "int_0^1 B_2(x) log Gamma(x) dx = zeta(3)/(4 pi^2)",
    )
    .reference("Kummer series for log Gamma")
    .rationale(
        "logarithmic singularity at 0 flagged; the value follows termwise from the Kummer series, \
             the form 2! zeta(3)/(2 (2 pi)^3) is smaller by a factor 2 pi",
    )
    .annotate(move |_, l, _| {
        format!(
            "form 2! zeta(3)/(2 (2 pi)^3) misses by {:.3e}",
            (l[0] - printed(zeta(3.0))).abs()
        )
    })
    .sides(
        |ctx| {
            let f = |x: f64| bernoulli_poly(2, x).unwrap_or(f64::NAN) * log_gamma(x).val();
            Ok(vec![finite(ctx, f, 0.0, 1.0, SingularEndpoints::LEFT)?])
        },
        |_| Ok(vec![zeta(3.0) / (4.0 * PI * PI)]),
    )]
}

fn cot_pi6() -> Vec<IdentityRecord> {
    vec![Entry::claimed(
        "I-4-cot-pi6",
        1e-8,
        "int_0^{pi/6} x^2 cot x dx = -zeta(3)/3 + (pi^2/36) log(2 sin(pi/6)) + (sqrt3 pi/6)[-(4/9) zeta(2) + (zeta(2,1/6) + zeta(2,1/3))/36]",
    )
    .rationale("bounded integrand, x² cot x ~ x at 0")
    .sides(
        |ctx| Ok(vec![finite(ctx, |x| x * x / x.tan(), 0.0, PI / 6.0, SingularEndpoints::LEFT)?]),
        |_| {
            let bracket = -4.0 / 9.0 * zeta(2.0) + (hurwitz_zeta(2.0, 1.0 / 6.0)?.value + hurwitz_zeta(2.0, 1.0 / 3.0)?.value) / 36.0;
            Ok(vec![
                -zeta(3.0) / 3.0 + PI * PI / 36.0 * (2.0 * (PI / 6.0).sin()).ln() + 3f64.sqrt() * PI / 6.0 * bracket,
            ])
        },
    )]
}

fn cot_pi8() -> Vec<IdentityRecord> {
    let rest = || -> f64 {
        PI / 16.0 * (2.0 - SQRT_2).ln()
            + (SQRT_2 * hurwitz_zeta(2.0, 0.125).val() - 2.0 * (SQRT_2 + 1.0) * PI * PI) / 64.0
    };
    vec![Entry::claimed(
        "I-4-cot-pi8",
        1e-8,
        "int_0^{pi/8} x cot x dx = (pi/16) log(2 - sqrt2) + (1 - 2 sqrt2) G/8 + [sqrt2 zeta(2,1/8) - 2(sqrt2 + 1) pi^2]/64",
    )
    .rationale(
        "bounded integrand; the Catalan coefficient is (1 - 2 sqrt2)/8, with (1 - sqrt2)/8 the value misses by sqrt2 G/8",
    )
    .annotate(move |_, l, _| {
        let printed = rest() + (1.0 - SQRT_2) * catalan().value / 8.0;
        format!("Catalan coefficient (1 - sqrt2)/8 misses by {:.3e}", (l[0] - printed).abs())
    })
    .sides(
        |ctx| Ok(vec![finite(ctx, |x| x / x.tan(), 0.0, PI / 8.0, SingularEndpoints::LEFT)?]),
        move |_| Ok(vec![rest() + (1.0 - 2.0 * SQRT_2) * catalan().value / 8.0]),
    )]
}

fn log_gamma_cot() -> Vec<IdentityRecord> {
    vec![Entry::claimed(
        "I-4-loggamma-cot",
        1e-7,
        "int_0^1 log Gamma(1+x) cot(pi x) dx = (1/pi) sum_{n>=1} Ci(2n pi)/n",
    )
    .rationale(
        "log Γ(1+x) vanishes at both ends, bounded integrand; Ci(2nπ)/n ~ -1/(4π²n³), Richardson",
    )
    .sides(
        |ctx| {
            let f = |x: f64| log_gamma(1.0 + x).val() / (PI * x).tan();
            Ok(vec![finite(ctx, f, 0.0, 1.0, SingularEndpoints::BOTH)?])
        },
        |ctx| {
            let t = |n: usize| cosine_integral(2.0 * PI * n as f64).val() / n as f64;
            Ok(vec![series(ctx, AccelMode::Richardson, t)? / PI])
        },
    )]
}
