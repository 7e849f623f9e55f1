//! Abel–Plana summation in its plain, alternating and half-integer forms.

use std::cell::Cell;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::poisson::half_plus_series;
use super::{report, EngineConfig, EngineReport};
use crate::error::{domain, NumError, Result};
use crate::quadrature::{accelerate_series_with, integrate_semiinf_decay_with, AccelMode};
use crate::special_functions::Approximation;

const EPS: f64 = f64::EPSILON;
/// Allowed |Im| / |Re| of i[f(ix) − f(−ix)].
const SYMMETRY_TOL: f64 = 1e-10;
/// Allowed mismatch between `eval` on the real axis and `real`.
const RESTRICTION_TOL: f64 = 1e-14;
const RESTRICTION_SAMPLES: [f64; 6] = [0.0, 0.25, 0.5, 1.0, 2.0, 5.0];

/// A function analytic in the closed right half-plane, real on the real
/// axis. `eval` must use principal branches for powers and logarithms of
/// a ± iy with a > 0.
pub trait ComplexCapableFn: Sync {
    fn eval(&self, z: Complex64) -> Complex64;

    /// Restriction to the real axis; defaults to `eval(x + 0i).re`.
    fn real(&self, x: f64) -> f64 {
        self.eval(Complex64::new(x, 0.0)).re
    }
}

/// Wraps a complex closure as a [`ComplexCapableFn`].
pub struct Analytic<F>(pub F);

impl<F: Fn(Complex64) -> Complex64 + Sync> ComplexCapableFn for Analytic<F> {
    fn eval(&self, z: Complex64) -> Complex64 {
        (self.0)(z)
    }
}

/// Complex closure paired with a separately coded real restriction.
pub struct AnalyticWithReal<F, G> {
    pub complex: F,
    pub real: G,
}

impl<F, G> ComplexCapableFn for AnalyticWithReal<F, G>
where
    F: Fn(Complex64) -> Complex64 + Sync,
    G: Fn(f64) -> f64 + Sync,
{
    fn eval(&self, z: Complex64) -> Complex64 {
        (self.complex)(z)
    }

    fn real(&self, x: f64) -> f64 {
        (self.real)(x)
    }
}

/// Checks that `eval(x + 0i)` agrees with `real(x)` on the samples.
pub fn check_real_restriction(f: &dyn ComplexCapableFn, samples: &[f64]) -> Result<()> {
    for &x in samples {
        let z = f.eval(Complex64::new(x, 0.0));
        let r = f.real(x);
        let scale = r.abs().max(1.0);
        if !((z.re - r).abs() <= RESTRICTION_TOL * scale && z.im.abs() <= RESTRICTION_TOL * scale) {
            return Err(NumError::SymmetryViolation(format!(
                "complex evaluator gives {z} at x = {x}, real restriction gives {r}"
            )));
        }
    }
    Ok(())
}

/// ½f(0) + Σ_{n≥1} f(n) against
/// ∫₀^∞ f + ∫₀^∞ i[f(ix) − f(−ix)] / (e^{2πx} − 1) dx.
pub fn abel_plana(f: &dyn ComplexCapableFn, tol: f64) -> Result<EngineReport> {
    abel_plana_with(f, tol, &EngineConfig::default())
}

pub fn abel_plana_with(
    f: &dyn ComplexCapableFn,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    prepare(f, tol)?;
    let real = |x: f64| f.real(x);
    let lhs = half_plus_series(&real, AccelMode::Auto, tol, cfg)?;
    let base = integrate_semiinf_decay_with(real, 0.0, tol / 4.0, &cfg.quad)?;
    let corr = discrepancy(f, |x| (2.0 * PI * x).exp_m1(), tol / 4.0, cfg)?;
    let rhs = Approximation::new(
        base.value + corr.value,
        base.abs_err + corr.abs_err,
        base.evals + corr.work,
    );
    Ok(report(lhs, rhs, 0, tol))
}

/// ½f(0) + Σ_{n≥1} (−1)ⁿ f(n) against ∫₀^∞ i[f(ix) − f(−ix)] / (2 sinh πx) dx.
pub fn abel_plana_alternating(f: &dyn ComplexCapableFn, tol: f64) -> Result<EngineReport> {
    abel_plana_alternating_with(f, tol, &EngineConfig::default())
}

pub fn abel_plana_alternating_with(
    f: &dyn ComplexCapableFn,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    prepare(f, tol)?;
    let signed = |x: f64| {
        let v = f.real(x);
        if (x as usize) % 2 == 1 {
            -v
        } else {
            v
        }
    };
    let lhs = half_plus_series(&signed, AccelMode::Auto, tol, cfg)?;
    let rhs = discrepancy(f, |x| 2.0 * (PI * x).sinh(), tol / 2.0, cfg)?;
    Ok(report(lhs, rhs, 0, tol))
}

/// Σ_{n≥0} f(n + ½) against ∫₀^∞ f − ∫₀^∞ i[f(ix) − f(−ix)] / (e^{2πx} + 1) dx.
pub fn abel_plana_halfinteger(f: &dyn ComplexCapableFn, tol: f64) -> Result<EngineReport> {
    abel_plana_halfinteger_with(f, tol, &EngineConfig::default())
}

pub fn abel_plana_halfinteger_with(
    f: &dyn ComplexCapableFn,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<EngineReport> {
    prepare(f, tol)?;
    let first = f.real(0.5);
    if !first.is_finite() {
        return Err(domain("f(1/2) must be finite"));
    }
    let rest = accelerate_series_with(
        |n| f.real(n as f64 + 0.5),
        AccelMode::Auto,
        tol / 4.0,
        cfg.max_terms,
    )
    .map_err(|e| match e {
        NumError::AccelerationFailure(m) => {
            NumError::Divergence(format!("half-integer sum does not converge: {m}"))
        }
        other => other,
    })?;
    let lhs = Approximation::new(first + rest.value, rest.abs_err, rest.work + 1);
    let base = integrate_semiinf_decay_with(|x| f.real(x), 0.0, tol / 4.0, &cfg.quad)?;
    let corr = discrepancy(f, |x| (2.0 * PI * x).exp() + 1.0, tol / 4.0, cfg)?;
    let rhs = Approximation::new(
        base.value - corr.value,
        base.abs_err + corr.abs_err,
        base.evals + corr.work,
    );
    Ok(report(lhs, rhs, 0, tol))
}

fn prepare(f: &dyn ComplexCapableFn, tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    check_real_restriction(f, &RESTRICTION_SAMPLES)
}

/// ∫₀^∞ i[f(ix) − f(−ix)] / denom(x) dx, checking along the way that the
/// numerator is real.
fn discrepancy(
    f: &dyn ComplexCapableFn,
    denom: impl Fn(f64) -> f64,
    tol: f64,
    cfg: &EngineConfig,
) -> Result<Approximation> {
    let violation: Cell<Option<(f64, Complex64)>> = Cell::new(None);
    let integrand = |x: f64| {
        let up = f.eval(Complex64::new(0.0, x));
        let down = f.eval(Complex64::new(0.0, -x));
        let g = Complex64::i() * (up - down);
        // rounding in f(±ix) itself bounds how real g can be
        let allowed = SYMMETRY_TOL * g.re.abs() + 64.0 * EPS * (up.norm() + down.norm());
        if !(g.im.abs() <= allowed) && violation.get().is_none() {
            violation.set(Some((x, g)));
        }
        let d = denom(x);
        if d.is_infinite() {
            0.0
        } else {
            g.re / d
        }
    };
    let r = integrate_semiinf_decay_with(integrand, 0.0, tol, &cfg.quad);
    if let Some((x, g)) = violation.get() {
        return Err(NumError::SymmetryViolation(format!(
            "i[f(ix) - f(-ix)] = {g} is not real at x = {x}"
        )));
    }
    let r = r?;
    Ok(Approximation::new(r.value, r.abs_err, r.evals))
}
