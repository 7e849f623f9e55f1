use super::finite::integrate_finite_with;
use super::{QuadConfig, QuadResult, SingularEndpoints};
use crate::error::{domain, NumError, Result};

/// Beyond this abscissa a negligible panel ends the integration outright.
const DECAY_CAP: f64 = 700.0;
const MAX_PANELS: usize = 96;

/// ∫ₐ^∞ f for integrands that decay (exponentially, or algebraically
/// faster than 1/x).
pub fn integrate_semiinf_decay(f: impl Fn(f64) -> f64, a: f64, tol: f64) -> Result<QuadResult> {
    integrate_semiinf_decay_with(f, a, tol, &QuadConfig::default())
}

/// ∫ₐ^∞ f with an explicit budget.
///
/// Panels [a, a+1], [a+1, a+2], [a+2, a+4], … are integrated until one
/// contributes less than tol/10 and the geometric projection of the
/// remaining panels is also below tol/10; that projection is added.
pub fn integrate_semiinf_decay_with(
    f: impl Fn(f64) -> f64,
    a: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if !a.is_finite() {
        return Err(domain(format!("lower limit must be finite, got {a}")));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut value = 0.0;
    let mut err = 0.0;
    let mut evals = 0;
    let mut lo = a;
    let mut width = 1.0;
    let mut history: Vec<f64> = Vec::new();
    let mut growing = 0;
    for k in 0..MAX_PANELS {
        let hi = lo + width;
        let sub = QuadConfig {
            budget: cfg.budget.saturating_sub(evals).max(42),
        };
        let r = integrate_finite_with(
            &f,
            lo,
            hi,
            tol / 20.0 * 0.5f64.powi(k.min(40) as i32),
            SingularEndpoints::NONE,
            &sub,
        )
        .map_err(|e| match e {
            NumError::BudgetExceeded {
                best,
                err: e2,
                evals: n,
            } => NumError::BudgetExceeded {
                best: value + best,
                err: err + e2,
                evals: evals + n,
            },
            other => other,
        })?;
        evals += r.evals;
        value += r.value;
        err += r.abs_err;
        let p = r.value;
        if let Some(&q) = history.last() {
            if p.abs() >= q.abs() && p.abs() > tol {
                growing += 1;
            } else {
                growing = 0;
            }
        }
        history.push(p);
        if growing >= 4 {
            return Err(NumError::Divergence(format!(
                "tail panels stop shrinking near x = {hi:e}"
            )));
        }
        if p.abs() < 0.1 * tol && history.len() >= 3 {
            let q = history[history.len() - 2];
            let tail = if q != 0.0 && p / q > 0.0 && p / q < 1.0 {
                let r = p / q;
                p * r / (1.0 - r)
            } else {
                0.0
            };
            if tail.abs() < 0.1 * tol || (hi - a) >= DECAY_CAP && p.abs() < 1e-3 * tol {
                value += tail;
                err += tail.abs() * 0.5 + p.abs() * 0.1;
                return Ok(QuadResult {
                    value,
                    abs_err: err,
                    evals,
                    segments: k + 1,
                });
            }
        }
        if k >= 1 {
            width *= 2.0;
        }
        lo = hi;
    }
    Err(NumError::BudgetExceeded {
        best: value,
        err: err + history.last().map_or(f64::INFINITY, |p| p.abs()),
        evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential() {
        let r = integrate_semiinf_decay(|x: f64| (-x).exp(), 0.0, 1e-13).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
    }

    #[test]
    fn bose_type_integrals() {
        let r = integrate_semiinf_decay(|x: f64| x / (2.0 * PI * x).exp_m1(), 0.0, 1e-14).unwrap();
        assert!((r.value - 1.0 / 24.0).abs() < 1e-14);
        let r = integrate_semiinf_decay(
            |x: f64| x / ((1.0 + x * x) * (2.0 * PI * x).exp_m1()),
            0.0,
            1e-14,
        )
        .unwrap();
        let want = 0.5 * (crate::special_functions::EULER_GAMMA - 0.5);
        assert!((r.value - want).abs() < 1e-13, "{}", r.value);
    }

    #[test]
    fn algebraic_decay() {
        let r =
            integrate_semiinf_decay(|x: f64| 1.0 / ((1.0 + x) * (1.0 + x)), 0.0, 1e-11).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn non_decay_is_divergence() {
        let r = integrate_semiinf_decay(|x: f64| 1.0 + x, 0.0, 1e-8);
        assert!(matches!(r, Err(NumError::Divergence(_))));
    }
}
