//! Poisson summation: the semi-infinite, finite-interval and alternating
//! forms, each with the Fourier-mode side summed numerically.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{report, EngineConfig, EngineReport};
use crate::error::{domain, NumError, Result};
use crate::extrapolate::richardson;
use crate::quadrature::{
    accelerate_series_with, integrate_finite_with, integrate_oscillatory_semiinf_with,
    integrate_semiinf_decay_with, AccelMode, OscillatoryKernel, QuadResult, SingularEndpoints,
};
use crate::special_functions::{bernoulli_poly_periodic, Approximation};

/// Tolerance on |x − round(x)| for treating an endpoint as an integer.
const INTEGER_SNAP: f64 = 1e-12;
const FIRST_CHECKPOINT: usize = 8;

/// ½f(0) + Σ_{n≥1} f(n) against ∫₀^∞ f + 2 Σ_{n≥1} ∫₀^∞ f(x) cos 2πnx dx.
///
/// At most `modes` Fourier modes are computed; the remaining mode tail is
/// extrapolated.
pub fn poisson_semiinf(
    f: impl Fn(f64) -> f64 + Sync,
    modes: usize,
    tol: f64,
) -> Result<EngineReport> {
    poisson_semiinf_with(f, modes, tol, &EngineConfig::default())
}

pub fn poisson_semiinf_with(
    f: impl Fn(f64) -> f64 + Sync,
    modes: usize,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    check(modes, tol)?;
    let lhs = half_plus_series(&f, AccelMode::Auto, tol, cfg)?;
    let base = integrate_semiinf_decay_with(&f, 0.0, tol / 4.0, &cfg.quad)?;
    let mode_tol = tol / (4.0 * modes as f64);
    let edge = EdgeExpansion::at_zero(&f);
    let (tail, used) = mode_series(
        |n| {
            let w = 2.0 * PI * n as f64;
            let r = integrate_oscillatory_semiinf_with(
                &f,
                OscillatoryKernel::cosine(w),
                0.0,
                mode_tol,
                &cfg.quad,
            )?;
            Ok(edge.remove(r, w))
        },
        modes,
        tol / 4.0,
    )?;
    // Σ ω^{−2} = 1/24, Σ ω^{−4} = 1/1440 over ω = 2πn
    let closed = edge.closed(1.0 / 24.0, 1.0 / 1440.0);
    let value = base.value + 2.0 * (closed + tail.value);
    let rhs = Approximation::new(
        value,
        base.abs_err + 2.0 * tail.abs_err,
        base.evals + tail.work,
    );
    Ok(report(lhs, rhs, used, tol))
}

/// ½f(0) + Σ_{n≥1} (−1)ⁿ f(n) against 2 Σ_{n≥0} ∫₀^∞ f(x) cos (2n+1)πx dx.
pub fn poisson_alternating(
    f: impl Fn(f64) -> f64 + Sync,
    modes: usize,
    tol: f64,
) -> Result<EngineReport> {
    poisson_alternating_with(f, modes, tol, &EngineConfig::default())
}

pub fn poisson_alternating_with(
    f: impl Fn(f64) -> f64 + Sync,
    modes: usize,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    check(modes, tol)?;
    let signed = |x: f64| if (x as usize) % 2 == 1 { -f(x) } else { f(x) };
    let lhs = half_plus_series(&signed, AccelMode::Auto, tol, cfg)?;
    let mode_tol = tol / (4.0 * modes as f64);
    let edge = EdgeExpansion::at_zero(&f);
    let (sum, used) = mode_series(
        |m| {
            let w = (2 * m - 1) as f64 * PI;
            let r = integrate_oscillatory_semiinf_with(
                &f,
                OscillatoryKernel::cosine(w),
                0.0,
                mode_tol,
                &cfg.quad,
            )?;
            Ok(edge.remove(r, w))
        },
        modes,
        tol / 4.0,
    )?;
    // Σ ω^{−2} = 1/8, Σ ω^{−4} = 1/96 over ω = (2m−1)π
    let closed = edge.closed(1.0 / 8.0, 1.0 / 96.0);
    let rhs = Approximation::new(2.0 * (closed + sum.value), 2.0 * sum.abs_err, sum.work);
    Ok(report(lhs, rhs, used, tol))
}

/// Σ^# f(n) over the integers of [a, b], integer endpoints weighted ½,
/// against ∫ₐᵇ f + 2 Σ_{n≥1} ∫ₐᵇ f(x) cos 2πnx dx.
///
/// Each mode integral has its four-term integration-by-parts boundary
/// expansion removed; the removed series is added back in closed form
/// through periodic Bernoulli polynomials, so only the fast-decaying
/// remainders are summed numerically.
pub fn poisson_finite(
    f: impl Fn(f64) -> f64 + Sync,
    a: f64,
    b: f64,
    modes: usize,
    tol: f64,
) -> Result<EngineReport> {
    poisson_finite_with(f, a, b, modes, tol, &EngineConfig::default())
}

pub fn poisson_finite_with(
    f: impl Fn(f64) -> f64 + Sync,
    a: f64,
    b: f64,
    modes: usize,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    check(modes, tol)?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(domain(format!(
            "interval [{a}, {b}] must be finite with a < b"
        )));
    }
    let (a, b) = (snap(a), snap(b));
    let lhs = endpoint_weighted_sum(&f, a, b)?;

    let base = integrate_finite_with(&f, a, b, tol / 4.0, SingularEndpoints::NONE, &cfg.quad)?;
    let da = one_sided_derivatives(&f, a, (b - a) / 16.0)?;
    let db = one_sided_derivatives(&f, b, -(b - a) / 16.0)?;
    let boundary = |n: usize| {
        let w = 2.0 * PI * n as f64;
        let at = |x: f64, d: &[f64; 4]| {
            let (s, c) = (w * x).sin_cos();
            d[0] * s / w + d[1] * c / (w * w) - d[2] * s / w.powi(3) - d[3] * c / w.powi(4)
        };
        at(b, &db) - at(a, &da)
    };
    let mode_tol = tol / (4.0 * modes as f64);
    let (rem, used) = mode_series(
        |n| {
            let w = 2.0 * PI * n as f64;
            let r = integrate_finite_with(
                |x| f(x) * (w * x).cos(),
                a,
                b,
                mode_tol,
                SingularEndpoints::NONE,
                &cfg.quad,
            )?;
            Ok(QuadResult {
                value: r.value - boundary(n),
                ..r
            })
        },
        modes,
        tol / 4.0,
    )?;
    let closed = |x: f64, d: &[f64; 4]| -> Result<f64> {
        // Σ sin(ωx)/ω, Σ cos(ωx)/ω², Σ sin(ωx)/ω³, Σ cos(ωx)/ω⁴ over ω = 2πn
        let s1 = -0.5 * bernoulli_poly_periodic(1, x)?;
        let c2 = bernoulli_poly_periodic(2, x)? / 4.0;
        let s3 = bernoulli_poly_periodic(3, x)? / 12.0;
        let c4 = -bernoulli_poly_periodic(4, x)? / 48.0;
        Ok(d[0] * s1 + d[1] * c2 - d[2] * s3 - d[3] * c4)
    };
    let boundary_sum = closed(b, &db)? - closed(a, &da)?;
    let value = base.value + 2.0 * (boundary_sum + rem.value);
    let err = base.abs_err + 2.0 * rem.abs_err + 16.0 * f64::EPSILON * boundary_sum.abs();
    let rhs = Approximation::new(value, err, base.evals + rem.work);
    Ok(report(lhs, rhs, used, tol))
}

/// The leading terms −f′(0)/ω² + f‴(0)/ω⁴ of ∫₀^∞ f(x) cos ωx dx.
/// Removing them from every mode leaves remainders of order ω^{−6}; an
/// inaccurate derivative only slows that decay, since the same values are
/// added back in closed form.
struct EdgeExpansion {
    d1: f64,
    d3: f64,
}

impl EdgeExpansion {
    fn at_zero(f: &impl Fn(f64) -> f64) -> Self {
        match one_sided_derivatives(f, 0.0, 1.0 / 16.0) {
            Ok(d) if d[1].is_finite() && d[3].is_finite() => EdgeExpansion { d1: d[1], d3: d[3] },
            _ => EdgeExpansion { d1: 0.0, d3: 0.0 },
        }
    }

    fn remove(&self, r: QuadResult, w: f64) -> QuadResult {
        let w2 = w * w;
        QuadResult {
            value: r.value + self.d1 / w2 - self.d3 / (w2 * w2),
            ..r
        }
    }

    /// Σ of the removed terms, given Σω^{−2} and Σω^{−4}.
    fn closed(&self, inv2: f64, inv4: f64) -> f64 {
        -self.d1 * inv2 + self.d3 * inv4
    }
}

fn check(modes: usize, tol: f64) -> Result<()> {
    if modes == 0 {
        return Err(domain("mode count must be at least 1"));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

fn snap(x: f64) -> f64 {
    if (x - x.round()).abs() <= INTEGER_SNAP {
        x.round()
    } else {
        x
    }
}

/// ½f(0) + Σ_{n≥1} f(n).
pub(super) fn half_plus_series(
    f: &impl Fn(f64) -> f64,
    mode: AccelMode,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<Approximation> {
    let f0 = f(0.0);
    if !f0.is_finite() {
        return Err(domain("f(0) must be finite"));
    }
    let s = accelerate_series_with(|n| f(n as f64), mode, tol / 4.0, cfg.max_terms).map_err(
        |e| match e {
            NumError::AccelerationFailure(m) => {
                NumError::Divergence(format!("lattice sum does not converge: {m}"))
            }
            other => other,
        },
    )?;
    Ok(Approximation::new(
        0.5 * f0 + s.value,
        s.abs_err,
        s.work + 1,
    ))
}

fn endpoint_weighted_sum(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<Approximation> {
    let lo = a.ceil() as i64;
    let hi = b.floor() as i64;
    let mut s = 0.0;
    let mut work = 0;
    for n in lo..=hi {
        let x = n as f64;
        let w = if x == a || x == b { 0.5 } else { 1.0 };
        let v = f(x);
        if !v.is_finite() {
            return Err(domain(format!("f({x}) is not finite")));
        }
        s += w * v;
        work += 1;
    }
    let err = 4.0 * f64::EPSILON * s.abs() * work.max(1) as f64;
    Ok(Approximation::new(s, err, work))
}

/// Σ_{n≥1} c_n for mode integrals c_n = mode(n), computing at most `cap`
/// modes. Stops once two successive modes fall below tol/10 (tail taken
/// as O(1/n²)); otherwise partial sums at 8, 16, 32, … modes are
/// Richardson-extrapolated. Returns the sum and the modes used.
fn mode_series(
    mode: impl Fn(usize) -> Result<QuadResult> + Sync,
    cap: usize,
    tol: f64,
) -> Result<(Approximation, usize)> {
    let mut c: Vec<f64> = Vec::new();
    let mut mode_err = 0.0;
    let mut work = 0;
    let mut checkpoints: Vec<f64> = Vec::new();
    let mut limit = FIRST_CHECKPOINT.min(cap);
    loop {
        let start = c.len() + 1;
        let batch: Vec<Result<QuadResult>> = (start..=limit).into_par_iter().map(&mode).collect();
        for r in batch {
            let r = r?;
            mode_err += r.abs_err;
            work += r.evals;
            c.push(r.value);
            let n = c.len();
            if n >= 2 && c[n - 1].abs() < 0.1 * tol && c[n - 2].abs() < 0.1 * tol {
                let tail = 0.5 * (c[n - 1] + c[n - 2]) * (n as f64 - 0.5);
                if tail.abs() < 0.1 * tol {
                    let s = ordered_sum(&c) + tail;
                    return Ok((
                        Approximation::new(s, mode_err + tail.abs() + 0.1 * tol, work),
                        n,
                    ));
                }
            }
        }
        let s = ordered_sum(&c);
        let n = c.len();
        if n == limit && limit.is_power_of_two() && limit >= FIRST_CHECKPOINT {
            checkpoints.push(s);
        }
        if checkpoints.len() >= 3 {
            let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let ext = richardson(&checkpoints, scale, 2.0, |j| j as f64);
            let k = checkpoints.len();
            let plain = (checkpoints[k - 1] - checkpoints[k - 2]).abs();
            let done = limit >= cap || 2 * limit > cap;
            if ext.err <= tol || done {
                // keep whichever estimate is more trustworthy
                let (v, e) = if ext.err <= plain {
                    (ext.value, ext.err)
                } else {
                    (s, plain)
                };
                return Ok((Approximation::new(v, e + mode_err, work), n));
            }
        } else if limit >= cap {
            let last = c[n - 1].abs() * n as f64;
            return Ok((Approximation::new(s, mode_err + last, work), n));
        }
        limit = (2 * limit).min(cap);
    }
}

fn ordered_sum(v: &[f64]) -> f64 {
    // Neumaier summation in mode order
    let (mut s, mut comp) = (0.0f64, 0.0f64);
    for &x in v {
        let t = s + x;
        if s.abs() >= x.abs() {
            comp += (s - t) + x;
        } else {
            comp += (x - t) + s;
        }
        s = t;
    }
    s + comp
}

/// f, f', f'', f''' at x0 from one-sided nine-point stencils x0 + j·h;
/// the step is refined by factors of four and the value sequence with the
/// smallest successive change is kept for each order.
fn one_sided_derivatives(f: &impl Fn(f64) -> f64, x0: f64, h0: f64) -> Result<[f64; 4]> {
    const NODES: usize = 9;
    const LEVELS: usize = 6;
    let f0 = f(x0);
    if !f0.is_finite() {
        return Err(domain(format!("f({x0}) is not finite")));
    }
    let offsets: Vec<f64> = (0..NODES).map(|j| j as f64).collect();
    let w = fornberg(&offsets, 3);
    let mut est: Vec<[f64; 4]> = Vec::with_capacity(LEVELS);
    let mut h = h0;
    for _ in 0..LEVELS {
        let vals: Vec<f64> = (0..NODES).map(|j| f(x0 + j as f64 * h)).collect();
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(domain(format!("f is not finite near {x0}")));
        }
        let mut d = [f0, 0.0, 0.0, 0.0];
        for (k, dk) in d.iter_mut().enumerate().skip(1) {
            *dk = w[k].iter().zip(&vals).map(|(wi, vi)| wi * vi).sum::<f64>() / h.powi(k as i32);
        }
        est.push(d);
        h *= 0.25;
    }
    let mut out = [f0, 0.0, 0.0, 0.0];
    for (k, o) in out.iter_mut().enumerate().skip(1) {
        let best = (1..LEVELS)
            .min_by(|&i, &j| {
                let di = (est[i][k] - est[i - 1][k]).abs();
                let dj = (est[j][k] - est[j - 1][k]).abs();
                di.total_cmp(&dj)
            })
            .expect("several levels");
        *o = est[best][k];
    }
    Ok(out)
}

/// Finite-difference weights at 0 for derivatives 0..=m on the given
/// nodes (Fornberg's recursion). Returns w[k][j].
fn fornberg(x: &[f64], m: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut c = vec![vec![0.0; n]; m + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = x[0];
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i];
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::{digamma, hurwitz_zeta};
    use std::f64::consts::E;

    #[test]
    fn fornberg_weights_match_textbook_stencils() {
        let w = fornberg(&[0.0, 1.0, 2.0], 2);
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-14);
        assert!(close(&w[1], &[-1.5, 2.0, -0.5]));
        assert!(close(&w[2], &[1.0, -2.0, 1.0]));
    }

    #[test]
    fn derivatives_of_exponential() {
        let d = one_sided_derivatives(&|x: f64| (2.0 * x).exp(), 0.0, 1.0 / 16.0).unwrap();
        for (k, want) in [1.0, 2.0, 4.0, 8.0].iter().enumerate() {
            assert!((d[k] - want).abs() < 1e-6 * want, "order {k}: {}", d[k]);
        }
    }

    #[test]
    fn semiinf_exponential() {
        let r = poisson_semiinf(|x| (-x).exp(), 128, 1e-10).unwrap();
        let want = 0.5 + 1.0 / (E - 1.0);
        assert!((r.lhs.value - want).abs() < 1e-12, "{}", r.lhs.value);
        assert!(r.residual <= 1e-9, "{r:?}");
    }

    #[test]
    fn semiinf_gaussian_is_self_dual() {
        let r = poisson_semiinf(|x| (-PI * x * x).exp(), 64, 1e-10).unwrap();
        let theta: f64 = 0.5 + (1..10).map(|n| (-PI * (n * n) as f64).exp()).sum::<f64>();
        assert!((r.lhs.value - theta).abs() < 1e-13);
        assert!(r.residual <= 1e-10, "{r:?}");
        assert!(r.n_modes < 10);
    }

    #[test]
    fn zero_function() {
        let r = poisson_semiinf(|_| 0.0, 16, 1e-10).unwrap();
        assert_eq!((r.lhs.value, r.rhs.value), (0.0, 0.0));
        let r = poisson_alternating(|_| 0.0, 16, 1e-10).unwrap();
        assert_eq!((r.lhs.value, r.rhs.value), (0.0, 0.0));
    }

    #[test]
    fn finite_linear_on_unit_interval() {
        let r = poisson_finite(|x| x, 0.0, 1.0, 32, 1e-10).unwrap();
        assert!((r.lhs.value - 0.5).abs() < 1e-15);
        assert!(r.residual <= 1e-10, "{r:?}");
    }

    #[test]
    fn finite_constant_off_lattice() {
        let r = poisson_finite(|_| 3.0, 0.25, 0.75, 32, 1e-10).unwrap();
        assert_eq!(r.lhs.value, 0.0);
        assert!(r.residual <= 1e-10, "{r:?}");
    }

    #[test]
    fn finite_digamma_shifted() {
        let f = |x: f64| digamma(x + 0.25).unwrap().value;
        let r = poisson_finite(f, 0.0, 1.0, 64, 1e-9).unwrap();
        let want = 0.5 * (digamma(0.25).unwrap().value + digamma(1.25).unwrap().value);
        assert!((r.lhs.value - want).abs() < 1e-14);
        assert!(r.residual <= 1e-7, "{r:?}");
    }

    #[test]
    fn finite_non_lattice_interval_smooth() {
        // Σ^# e^{x} over integers in [0.3, 2.6] = e + e²
        let r = poisson_finite(|x| x.exp(), 0.3, 2.6, 64, 1e-10).unwrap();
        assert!((r.lhs.value - (E + E * E)).abs() < 1e-13);
        assert!(r.residual <= 1e-9, "{r:?}");
    }

    #[test]
    fn alternating_exponential() {
        let r = poisson_alternating(|x| (-x).exp(), 128, 1e-10).unwrap();
        let want = 1.0 / (1.0 + (-1.0f64).exp()) - 0.5;
        assert!((r.lhs.value - want).abs() < 1e-13, "{}", r.lhs.value);
        assert!(r.residual <= 1e-9, "{r:?}");
    }

    #[test]
    fn alternating_matches_even_odd_split() {
        let f = |x: f64| (-x).exp();
        let r = poisson_alternating(f, 64, 1e-10).unwrap();
        let all = 0.5 + 1.0 / (E - 1.0);
        let even = 0.5 + 1.0 / (E * E - 1.0);
        assert!((r.lhs.value - (2.0 * even - all)).abs() < 1e-10);
    }

    #[test]
    fn semiinf_lorentzian_modes_via_hurwitz_oracle() {
        // ½ + Σ_{n≥1} 1/(1+n)² = ½ + ζ(2, 2)
        let r = poisson_semiinf(|x| 1.0 / ((1.0 + x) * (1.0 + x)), 128, 1e-8).unwrap();
        let want = 0.5 + hurwitz_zeta(2.0, 2.0).unwrap().value;
        assert!((r.lhs.value - want).abs() < 1e-10);
        assert!(r.residual <= 1e-7, "{r:?}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(poisson_semiinf(|x| x, 0, 1e-10).is_err());
        assert!(poisson_finite(|x| x, 1.0, 0.0, 8, 1e-10).is_err());
        assert!(poisson_alternating(|x| x, 8, -1.0).is_err());
    }
}
