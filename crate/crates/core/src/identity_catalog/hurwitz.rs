//! Fourier-type representations of the Hurwitz zeta function and the
//! Stieltjes constants.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::helpers::{cosine_mode_sum, each, finite, fourier, oscillatory, series, Entry};
use super::{Ctx, IdentityRecord};
use crate::error::Result;
use crate::quadrature::{AccelMode, OscillatoryKernel, SingularEndpoints};
use crate::special_functions::{
    alternating_hurwitz, hurwitz_zeta, log_gamma, log_power_derivative, stieltjes_gamma, ValueOrNan,
};
use crate::summation_engines::{regularized_limit, LimitLadder, LimitModel};

pub(super) fn entries() -> Vec<IdentityRecord> {
    vec![
        mode_representation(),
        hurwitz_formula(),
        functional_equation(),
        boudjelkha(),
        mellin_modes(),
        disputed_unit_interval(),
        stieltjes_modes(),
    ]
}

fn gamma(x: f64) -> Result<f64> {
    Ok(log_gamma(x)?.value.exp())
}

/// c(c−1)…(c−k+1).
fn falling(c: f64, k: usize) -> f64 {
    (0..k).map(|j| c - j as f64).product()
}

fn mode_representation() -> IdentityRecord {
    const SA: [(f64, f64); 3] = [(2.0, 0.7), (3.0, 1.3), (-0.5, 1.0)];
    Entry::claimed(
        "I-3.7.1",
        1e-7,
        "zeta(s, a) = a^{-s}/2 + a^{1-s}/(s-1) + 2 sum_{n>=1} int_0^inf cos(2 pi n x)/(a+x)^s dx",
    )
    .reference("Mordell (corrected)")
    .samples(["s = 2, a = 0.7", "s = 3, a = 1.3", "s = -1/2, a = 1"])
    .rationale(
        "each mode integrated by parts six times; boundary terms summed in closed form, \
         remainders ~ n^{-8} by oscillatory quadrature of the sixth derivative",
    )
    .sides(
        |_| each(&SA, |(s, a)| Ok(hurwitz_zeta(s, a)?.value)),
        |ctx| {
            each(&SA, |(s, a)| {
                let d = |k: usize, x: f64| falling(-s, k) * (a + x).powf(-s - k as f64);
                let modes = cosine_mode_sum(ctx, |x| d(6, x), [d(1, 0.0), d(3, 0.0), d(5, 0.0)])?;
                Ok(0.5 * a.powf(-s) + a.powf(1.0 - s) / (s - 1.0) + 2.0 * modes)
            })
        },
    )
}

fn hurwitz_formula() -> IdentityRecord {
    const SA: [(f64, f64); 3] = [(-0.5, 1.0 / 3.0), (-1.5, 0.25), (0.5, 0.7)];
    Entry::claimed(
        "I-3.7.8",
        1e-8,
        "zeta(s, a) = 2 Gamma(1-s) [sin(pi s/2) sum cos(2n pi a)/(2 pi n)^{1-s} + cos(pi s/2) sum sin(2n pi a)/(2 pi n)^{1-s}]",
    )
    .reference("Hurwitz")
    .samples(["s = -1/2, a = 1/3", "s = -3/2, a = 1/4", "s = 1/2, a = 0.7"])
    .rationale("both trigonometric series as one complex series in e^{2πina}, iterated Aitken")
    .sides(
        |_| each(&SA, |(s, a)| Ok(hurwitz_zeta(s, a)?.value)),
        |ctx| {
            each(&SA, |(s, a)| {
                let z = fourier(ctx, 2.0 * PI * a, |n| (2.0 * PI * n as f64).powf(s - 1.0))?;
                let (sn, cs) = (0.5 * PI * s).sin_cos();
                Ok(2.0 * gamma(1.0 - s)? * (sn * z.re + cs * z.im))
            })
        },
    )
}

fn functional_equation() -> IdentityRecord {
    const S: [f64; 3] = [2.0, 3.0, 0.5];
    Entry::claimed(
        "I-3.7.9",
        1e-10,
        "zeta(1-s) = 2 (2 pi)^{-s} Gamma(s) cos(pi s/2) zeta(s)",
    )
    .reference("Riemann")
    .samples(["s = 2", "s = 3", "s = 1/2"])
    .rationale("both zeta values from Euler–Maclaurin; s = 3 checks the trivial zero")
    .sides(
        |_| each(&S, |s| Ok(hurwitz_zeta(1.0 - s, 1.0)?.value)),
        |_| {
            each(&S, |s| {
                Ok(2.0
                    * (2.0 * PI).powf(-s)
                    * gamma(s)?
                    * (0.5 * PI * s).cos()
                    * hurwitz_zeta(s, 1.0)?.value)
            })
        },
    )
}

fn boudjelkha() -> IdentityRecord {
    const S: f64 = -0.5;
    const A: f64 = 1.0 / 3.0;
    Entry::claimed(
        "I-3.7.10",
        1e-7,
        "zeta_a(s, a) = 2 Gamma(1-s) pi^{s-1} [sin(pi s/2) sum_{n>=0} cos((2n+1) pi a)/(2n+1)^{1-s} + cos(pi s/2) sum_{n>=0} sin((2n+1) pi a)/(2n+1)^{1-s}]",
    )
    .reference("Boudjelkha")
    .samples(["s = -1/2, a = 1/3"])
    .rationale("odd harmonics as one complex series, iterated Aitken; ζ_a from two Hurwitz values")
    .sides(
        |_| Ok(vec![alternating_hurwitz(S, A)?.value]),
        |ctx| {
            // e^{i(2n−1)πa} = e^{2πina}·e^{−iπa}
            let odd = fourier(ctx, 2.0 * PI * A, |n| ((2 * n - 1) as f64).powf(S - 1.0))?;
            let odd = odd * Complex64::from_polar(1.0, -PI * A);
            let (sn, cs) = (0.5 * PI * S).sin_cos();
            Ok(vec![2.0 * gamma(1.0 - S)? * PI.powf(S - 1.0) * (sn * odd.re + cs * odd.im)])
        },
    )
}

/// ∫₀^∞ x^{p−1} cos bx dx = Γ(p) cos(πp/2)/b^p.
fn mellin_cosine(p: f64, b: f64) -> Result<f64> {
    Ok(gamma(p)? * (0.5 * PI * p).cos() / b.powf(p))
}

fn mellin_modes() -> IdentityRecord {
    const S: [f64; 2] = [-0.5, -0.25];
    Entry::claimed(
        "I-3.7.14",
        1e-8,
        "sum_{n>=1} int_0^inf cos(2 pi n x)/x^s dx = zeta(s)/2",
    )
    .samples([
        "s = -1/2",
        "s = -1/4",
        "n = 1 integral, s = -1/2",
        "n = 1 integral, s = -1/4",
    ])
    .rationale(
        "modes from the Mellin cosine transform, summed by Richardson; \
             the n = 1 integral checked by oscillatory quadrature",
    )
    .sides(
        |ctx| {
            let mut v = each(&S, |s| {
                let c = mellin_cosine(1.0 - s, 2.0 * PI)?;
                series(ctx, AccelMode::Richardson, |n| c * (n as f64).powf(s - 1.0))
            })?;
            v.extend(each(&S, |s| {
                oscillatory(
                    ctx,
                    |x| x.powf(-s),
                    OscillatoryKernel::cosine(2.0 * PI),
                    ctx.tol,
                )
            })?);
            Ok(v)
        },
        |_| {
            let mut v = each(&S, |s| Ok(0.5 * hurwitz_zeta(s, 1.0)?.value))?;
            v.extend(each(&S, |s| mellin_cosine(1.0 - s, 2.0 * PI))?);
            Ok(v)
        },
    )
}

fn stieltjes_modes() -> IdentityRecord {
    const A: [f64; 2] = [1.0, 0.5];
    Entry::claimed(
        "I-3.7.17",
        1e-6,
        "gamma_1(a) = log(a)/(2a) - log^2(a)/2 + 2 sum_{n>=1} int_0^inf log(a+x)/(a+x) cos(2 pi n x) dx",
    )
    .reference("Zhang and Williams")
    .samples(["a = 1", "a = 1/2"])
    .rationale("modes integrated by parts six times as for the Hurwitz representation")
    .sides(
        |_| each(&A, |a| Ok(stieltjes_gamma(1, a)?.value)),
        |ctx| {
            each(&A, |a| {
                let d = |r: usize, x: f64| log_power_derivative(1, r, a + x);
                let modes = cosine_mode_sum(ctx, |x| d(6, x), [d(1, 0.0), d(3, 0.0), d(5, 0.0)])?;
                let l = a.ln();
                Ok(0.5 * l / a - 0.5 * l * l + 2.0 * modes)
            })
        },
    )
}

const UNIT_LADDER: (usize, usize) = (16, 5);

/// 2∫₀¹ cos(2πnx) x^{−1/2} dx = 4∫₀¹ cos(2πnu²) du.
fn unit_interval_mode(ctx: &Ctx, n: usize) -> Result<f64> {
    let w = 2.0 * PI * n as f64;
    Ok(4.0
        * finite(
            ctx,
            |u| (w * u * u).cos(),
            0.0,
            1.0,
            SingularEndpoints::NONE,
        )?)
}

/// Finite part of 2Σ_{n≤N}∫₀¹ cos(2πnx) x^{−1/2} dx after removing
/// 2√N + ½N^{−1/2} − N^{−3/2}/24.
fn unit_interval_finite_part(ctx: &Ctx) -> Result<f64> {
    let ladder = LimitLadder::new(UNIT_LADDER.0, UNIT_LADDER.1, LimitModel::Poly);
    let top = *ladder.points().last().expect("ladder point");
    let term_ctx = Ctx { tol: 1e-13, ..*ctx };
    let mut prefix = vec![0.0];
    for n in 1..=top {
        let t = unit_interval_mode(&term_ctx, n)?;
        prefix.push(prefix[n - 1] + t);
    }
    let growth = |n: usize| {
        let x = n as f64;
        2.0 * x.sqrt() + 0.5 / x.sqrt() - x.powf(-1.5) / 24.0
    };
    Ok(regularized_limit(|n| prefix[n], growth, &ladder)?.value)
}

fn disputed_unit_interval() -> IdentityRecord {
    const S: f64 = 0.5;
    Entry::disputed(
        "I-3.7.15",
        "2 sum_{n>=1} int_0^1 cos(2 pi n x)/x^s dx = 1/2 + 1/(s-1) + zeta(s) at s = 1/2",
    )
    .rationale(
        "each integral is finite but the terms behave like n^{-1/2}, so the series diverges like 2√N; \
         lhs is its finite part after removing 2√N + ½N^{-1/2} - N^{-3/2}/24",
    )
    .annotate(|_, l, r| {
        let z = hurwitz_zeta(S, 1.0).val();
        format!(
            "partial sums grow like 2 sqrt(N); finite part {:.12} vs claimed {:.12}: difference {:.12}, zeta(1/2) = {:.12}",
            l[0],
            r[0],
            l[0] - r[0],
            z
        )
    })
    .sides(
        |ctx| Ok(vec![unit_interval_finite_part(ctx)?]),
        |_| Ok(vec![0.5 + 1.0 / (S - 1.0) + hurwitz_zeta(S, 1.0)?.value]),
    )
}
