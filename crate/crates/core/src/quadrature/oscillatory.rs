//! ∫ₐ^∞ f(x)·cos(ωx) or f(x)·sin(ωx) by splitting at the kernel zeros and
//! accelerating the resulting panel series.

use num_complex::Complex64;

use super::accel::{euler_average, iterated_aitken};
use super::finite::integrate_finite_with;
use super::rules::gauss15;
use super::{QuadConfig, QuadResult, SingularEndpoints};
use crate::error::{domain, NumError, Result};

const EPS: f64 = f64::EPSILON;
const AITKEN_WINDOW: usize = 17;
const MIN_PANELS: usize = 24;
const CHECKED_PANELS: usize = 16;
const UNSETTLED_PANELS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    Cosine,
    Sine,
}

/// cos(ωx) or sin(ωx).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatoryKernel {
    pub kind: KernelKind,
    pub omega: f64,
}

impl OscillatoryKernel {
    pub fn cosine(omega: f64) -> Self {
        OscillatoryKernel {
            kind: KernelKind::Cosine,
            omega,
        }
    }

    pub fn sine(omega: f64) -> Self {
        OscillatoryKernel {
            kind: KernelKind::Sine,
            omega,
        }
    }

    fn eval(&self, x: f64) -> f64 {
        match self.kind {
            KernelKind::Cosine => (self.omega * x).cos(),
            KernelKind::Sine => (self.omega * x).sin(),
        }
    }

    /// k-th zero: (2k+1)π/(2ω) for cosine, kπ/ω for sine.
    fn zero(&self, k: usize) -> f64 {
        let pi = std::f64::consts::PI;
        match self.kind {
            KernelKind::Cosine => (2 * k + 1) as f64 * pi / (2.0 * self.omega),
            KernelKind::Sine => k as f64 * pi / self.omega,
        }
    }

    /// Index of the first zero strictly beyond a.
    fn first_zero_after(&self, a: f64) -> usize {
        let pi = std::f64::consts::PI;
        let t = a * self.omega / pi;
        let mut k = match self.kind {
            KernelKind::Cosine => (t - 0.5).floor().max(0.0) as usize,
            KernelKind::Sine => t.floor().max(0.0) as usize,
        };
        while self.zero(k) <= a * (1.0 + 4.0 * EPS) + 4.0 * EPS {
            k += 1;
        }
        k
    }
}

/// ∫ₐ^∞ f(x)·kernel(x) dx with the default budget.
pub fn integrate_oscillatory_semiinf(
    f: impl Fn(f64) -> f64,
    kernel: OscillatoryKernel,
    a: f64,
    tol: f64,
) -> Result<QuadResult> {
    integrate_oscillatory_semiinf_with(f, kernel, a, tol, &QuadConfig::default())
}

/// ∫ₐ^∞ f(x)·kernel(x) dx with an explicit budget.
///
/// Integrals that converge only conditionally, or whose panel series
/// alternates with growing amplitude, are returned as the limit of the
/// accelerated panel series.
pub fn integrate_oscillatory_semiinf_with(
    f: impl Fn(f64) -> f64,
    kernel: OscillatoryKernel,
    a: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if !(kernel.omega > 0.0) || !kernel.omega.is_finite() {
        return Err(domain(format!(
            "kernel frequency must be positive, got {}",
            kernel.omega
        )));
    }
    if !(a >= 0.0) || !a.is_finite() {
        return Err(domain(format!(
            "lower limit must be finite and >= 0, got {a}"
        )));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let g = |x: f64| f(x) * kernel.eval(x);
    let k0 = kernel.first_zero_after(a);
    let first_cfg = QuadConfig {
        budget: cfg.budget / 2,
    };
    let first = integrate_finite_with(
        g,
        a,
        kernel.zero(k0),
        0.05 * tol,
        SingularEndpoints::LEFT,
        &first_cfg,
    )?;
    let mut evals = first.evals;
    let mut err = first.abs_err;
    let mut panels = vec![first.value];
    let mut sums = vec![first.value];

    let mut prev_estimate: Option<f64> = None;
    let mut k = k0;
    loop {
        let (lo, hi) = (kernel.zero(k), kernel.zero(k + 1));
        let mut p = gauss15(&g, lo, hi);
        evals += 15;
        if panels.len() <= CHECKED_PANELS {
            let m = 0.5 * (lo + hi);
            let halves = gauss15(&g, lo, m) + gauss15(&g, m, hi);
            evals += 30;
            if (halves - p).abs() > 1e-3 * tol {
                let sub = QuadConfig {
                    budget: cfg.budget.saturating_sub(evals).max(42),
                };
                let r =
                    integrate_finite_with(g, lo, hi, 1e-3 * tol, SingularEndpoints::NONE, &sub)?;
                evals += r.evals;
                err += r.abs_err;
                p = r.value;
            } else {
                p = halves;
            }
        }
        if !p.is_finite() {
            return Err(domain(format!("integrand is not finite on [{lo}, {hi}]")));
        }
        panels.push(p);
        sums.push(sums.last().unwrap() + p);
        k += 1;

        let n = panels.len();
        if n < MIN_PANELS || n % 4 != 0 {
            if evals > cfg.budget {
                return Err(NumError::BudgetExceeded {
                    best: *sums.last().unwrap(),
                    err: f64::INFINITY,
                    evals,
                });
            }
            continue;
        }
        let recent = &panels[n - 4..];
        if recent.iter().all(|q| q.abs() <= 1e-4 * tol) {
            // absolutely convergent and already negligible
            return Ok(done(
                *sums.last().unwrap(),
                err + 4.0 * recent[3].abs(),
                evals,
                n,
            ));
        }
        // an amplitude that changes sign breaks alternation once; wait for
        // the break to leave the acceleration window
        let tail = &panels[n - AITKEN_WINDOW - 3..];
        let alternating = tail.windows(2).all(|w| w[0] * w[1] <= 0.0);
        if !alternating {
            let decaying = recent.windows(2).all(|w| w[1].abs() < 0.9 * w[0].abs());
            if !decaying {
                if n >= UNSETTLED_PANELS {
                    return Err(NumError::AccelerationFailure(
                        "panel series is neither alternating nor absolutely convergent".into(),
                    ));
                }
                if evals > cfg.budget {
                    return Err(NumError::BudgetExceeded {
                        best: *sums.last().unwrap(),
                        err: f64::INFINITY,
                        evals,
                    });
                }
                continue;
            }
        }
        // Aitken on the last partial sums, Euler averaging as a fallback
        let window: Vec<Complex64> = sums[n - AITKEN_WINDOW..]
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        let aitken = iterated_aitken(&window).re;
        let euler = euler_average(&sums[n - 20..]);
        let estimate = if let Some(prev) = prev_estimate {
            if (aitken - prev).abs() <= (euler - prev).abs() || !euler.is_finite() {
                aitken
            } else {
                euler
            }
        } else {
            aitken
        };
        if let Some(prev) = prev_estimate {
            let diff = (estimate - prev).abs();
            if diff <= 0.25 * tol || diff <= 32.0 * EPS * estimate.abs().max(sums[n - 1].abs()) {
                return Ok(done(
                    estimate,
                    err + diff.max(4.0 * EPS * estimate.abs()),
                    evals,
                    n,
                ));
            }
        }
        prev_estimate = Some(estimate);
        if evals > cfg.budget {
            return Err(NumError::BudgetExceeded {
                best: estimate,
                err: f64::INFINITY,
                evals,
            });
        }
    }
}

fn done(value: f64, abs_err: f64, evals: usize, segments: usize) -> QuadResult {
    QuadResult {
        value,
        abs_err,
        evals,
        segments: segments.max(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn dirichlet_integral() {
        let r =
            integrate_oscillatory_semiinf(|x| 1.0 / x, OscillatoryKernel::sine(1.0), 0.0, 1e-11)
                .unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-10, "{}", r.value);
        assert!(r.segments >= 2);
    }

    #[test]
    fn damped_cosine() {
        let r = integrate_oscillatory_semiinf(
            |x: f64| (-x).exp(),
            OscillatoryKernel::cosine(2.0 * PI),
            0.0,
            1e-13,
        )
        .unwrap();
        assert!(
            (r.value - 1.0 / (1.0 + 4.0 * PI * PI)).abs() < 1e-13,
            "{}",
            r.value
        );
    }

    #[test]
    fn fresnel_type() {
        let r = integrate_oscillatory_semiinf(
            |x: f64| 1.0 / x.sqrt(),
            OscillatoryKernel::cosine(1.0),
            0.0,
            1e-10,
        )
        .unwrap();
        assert!((r.value - (PI / 2.0).sqrt()).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn frullani_difference() {
        // ∫ (cos x − cos πx)/x dx = log π, split as two oscillatory pieces from 1
        let a =
            integrate_oscillatory_semiinf(|x| 1.0 / x, OscillatoryKernel::cosine(1.0), 1.0, 1e-12)
                .unwrap();
        let b =
            integrate_oscillatory_semiinf(|x| 1.0 / x, OscillatoryKernel::cosine(PI), 1.0, 1e-12)
                .unwrap();
        let head = integrate_finite_with(
            |x: f64| {
                if x == 0.0 {
                    0.0
                } else {
                    (x.cos() - (PI * x).cos()) / x
                }
            },
            0.0,
            1.0,
            1e-13,
            SingularEndpoints::NONE,
            &QuadConfig::default(),
        )
        .unwrap();
        let v = head.value + a.value - b.value;
        assert!((v - PI.ln()).abs() < 1e-10, "{v}");
    }

    #[test]
    fn growing_amplitude_in_abel_sense() {
        // ∫₀^∞ x^{1/2} cos 2πx dx = Γ(3/2) cos(3π/4) / (2π)^{3/2}
        let r = integrate_oscillatory_semiinf(
            |x: f64| x.sqrt(),
            OscillatoryKernel::cosine(2.0 * PI),
            0.0,
            1e-10,
        )
        .unwrap();
        let want = 0.5 * PI.sqrt() * (0.75 * PI).cos() / (2.0 * PI).powf(1.5);
        assert!((r.value - want).abs() < 1e-9, "{} vs {want}", r.value);
    }

    #[test]
    fn non_alternating_is_rejected() {
        let r = integrate_oscillatory_semiinf(
            |x: f64| x.cos().signum(),
            OscillatoryKernel::cosine(1.0),
            0.0,
            1e-8,
        );
        assert!(matches!(r, Err(NumError::AccelerationFailure(_))));
    }
}
