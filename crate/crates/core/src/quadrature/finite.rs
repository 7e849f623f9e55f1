use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::rules::{gk21, Panel};
use super::{QuadConfig, QuadResult, SingularEndpoints};
use crate::error::{domain, NumError, Result};

const EPS: f64 = f64::EPSILON;
const GEOMETRIC_RATIO: f64 = 0.25;
const RESOLUTION: f64 = 1e6;

/// ∫ₐᵇ f to absolute tolerance `tol` with the default budget.
pub fn integrate_finite(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    singular: SingularEndpoints,
) -> Result<QuadResult> {
    integrate_finite_with(f, a, b, tol, singular, &QuadConfig::default())
}

/// ∫ₐᵇ f with an explicit budget.
///
/// Flagged endpoints are approached through panels shrinking by a factor
/// of four, each integrated adaptively, until a panel contributes less
/// than tol/4; the rest is estimated from the geometric decay of the
/// panel contributions.
pub fn integrate_finite_with(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    singular: SingularEndpoints,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(domain(format!(
            "integration interval [{a}, {b}] must be finite with a < b"
        )));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut acc = Accum::new(cfg.budget);
    match (singular.left, singular.right) {
        (false, false) => acc.adaptive(&f, a, b, tol)?,
        (true, false) => acc.toward_endpoint(&f, b, a, tol)?,
        (false, true) => acc.toward_endpoint(&f, a, b, tol)?,
        (true, true) => {
            let m = 0.5 * (a + b);
            acc.toward_endpoint(&f, m, a, 0.5 * tol)?;
            acc.toward_endpoint(&f, m, b, 0.5 * tol)?;
        }
    }
    Ok(QuadResult {
        value: acc.value,
        abs_err: acc.err,
        evals: acc.evals,
        segments: acc.segments,
    })
}

struct Accum {
    value: f64,
    err: f64,
    evals: usize,
    segments: usize,
    budget: usize,
}

#[derive(Debug, Clone, Copy)]
struct Item {
    a: f64,
    b: f64,
    p: Panel,
}

impl PartialEq for Item {
    fn eq(&self, o: &Self) -> bool {
        self.p.err == o.p.err
    }
}
impl Eq for Item {}
impl PartialOrd for Item {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Item {
    fn cmp(&self, o: &Self) -> Ordering {
        self.p.err.total_cmp(&o.p.err)
    }
}

impl Accum {
    fn new(budget: usize) -> Self {
        Accum {
            value: 0.0,
            err: 0.0,
            evals: 0,
            segments: 0,
            budget,
        }
    }

    fn panel(&mut self, f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<Item> {
        let p = gk21(f, a, b);
        self.evals += 21;
        if p.bad {
            return Err(domain(format!("integrand is not finite on [{a}, {b}]")));
        }
        Ok(Item { a, b, p })
    }

    /// Global adaptive bisection on [a, b]; adds the result to the totals.
    fn adaptive(&mut self, f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<()> {
        let (v, e) = self.adaptive_value(f, a, b, tol)?;
        self.value += v;
        self.err += e;
        Ok(())
    }

    fn adaptive_value(
        &mut self,
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<(f64, f64)> {
        let first = self.panel(f, a, b)?;
        let mut heap = BinaryHeap::new();
        let mut done: Vec<Item> = Vec::new();
        heap.push(first);
        loop {
            let (value, err, abs) = heap
                .iter()
                .chain(done.iter())
                .fold((0.0, 0.0, 0.0), |(v, e, s), it| {
                    (v + it.p.value, e + it.p.err, s + it.p.abs)
                });
            if err <= tol.max(64.0 * EPS * abs) || heap.is_empty() {
                self.segments += heap.len() + done.len();
                // fixed summation order for bit-reproducibility
                let mut items: Vec<Item> = heap.into_vec();
                items.extend(done);
                items.sort_by(|x, y| x.a.total_cmp(&y.a));
                let v: f64 = items.iter().map(|it| it.p.value).sum();
                let e: f64 = items.iter().map(|it| it.p.err).sum();
                return Ok((v, e));
            }
            if self.evals + 42 > self.budget {
                return Err(NumError::BudgetExceeded {
                    best: self.value + value,
                    err: self.err + err,
                    evals: self.evals,
                });
            }
            let worst = heap.pop().expect("heap is non-empty");
            let m = 0.5 * (worst.a + worst.b);
            if m <= worst.a || m >= worst.b || (worst.b - worst.a) < 16.0 * EPS * m.abs() {
                done.push(worst);
                continue;
            }
            heap.push(self.panel(f, worst.a, m)?);
            heap.push(self.panel(f, m, worst.b)?);
        }
    }

    /// Integrates from the regular point `c` to the singular endpoint `e`.
    fn toward_endpoint(&mut self, f: &impl Fn(f64) -> f64, c: f64, e: f64, tol: f64) -> Result<()> {
        let len = c - e; // signed
        let orient = |x0: f64, x1: f64| if x0 < x1 { (x0, x1) } else { (x1, x0) };
        // core piece [e + len/4, c]
        let inner = e + GEOMETRIC_RATIO * len;
        let (lo, hi) = orient(inner, c);
        let (v, err) = self.adaptive_value(f, lo, hi, tol / 8.0)?;
        let mut total = v;
        let mut total_err = err;
        let mut prev: Option<f64> = None;
        let mut prev_ratio: Option<f64> = None;
        let mut width = GEOMETRIC_RATIO * len;
        // below this width node positions lose too many digits near e
        let resolution = RESOLUTION * EPS * e.abs();
        let mut k = 1;
        loop {
            let outer = e + width;
            let near = e + GEOMETRIC_RATIO * width;
            if near == e || near == outer {
                break;
            }
            let (lo, hi) = orient(near, outer);
            let (pv, pe) = self.adaptive_value(f, lo, hi, tol / 16.0 * 0.5f64.powi(k))?;
            total += pv;
            total_err += pe;
            let ratio = prev.filter(|&q| q != 0.0).map(|q| pv / q);
            let resolved = (GEOMETRIC_RATIO * width).abs() < resolution;
            if pv.abs() < 0.25 * tol || resolved {
                // geometric tail beyond the last panel
                let (tail, tail_err) = match ratio {
                    Some(r) if r > 0.0 && r < 1.0 => {
                        let tail = pv * r / (1.0 - r);
                        let drift = prev_ratio.map_or(r, |q: f64| (r - q).abs());
                        (tail, tail.abs() * drift / (1.0 - r))
                    }
                    _ => (0.0, f64::INFINITY),
                };
                total += tail;
                total_err += if pv.abs() < 0.25 * tol {
                    tail_err.min(tail.abs().max(pv.abs() * 0.25))
                } else {
                    tail_err
                };
                break;
            }
            prev = Some(pv);
            prev_ratio = ratio;
            width *= GEOMETRIC_RATIO;
            k += 1;
        }
        self.value += total;
        self.err += total_err;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_polynomial() {
        let r = integrate_finite(|_| 1.0, 0.0, 1.0, 1e-12, SingularEndpoints::NONE).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!(r.evals >= 1);
    }

    #[test]
    fn x_log_x_with_singular_flag() {
        let r = integrate_finite(|x| x * x.ln(), 0.0, 1.0, 1e-13, SingularEndpoints::LEFT).unwrap();
        assert!((r.value + 0.25).abs() < 1e-13, "{}", r.value);
    }

    #[test]
    fn inverse_sqrt_both_ends() {
        // ∫₀¹ dx / √(x(1−x)) = π
        let r = integrate_finite(
            |x| 1.0 / (x * (1.0 - x)).sqrt(),
            0.0,
            1.0,
            1e-11,
            SingularEndpoints::BOTH,
        )
        .unwrap();
        assert!(
            (r.value - std::f64::consts::PI).abs() < 1e-10,
            "{}",
            r.value
        );
        assert!((r.value - std::f64::consts::PI).abs() <= 10.0 * r.abs_err.max(1e-11));
    }

    #[test]
    fn budget_error_carries_estimate() {
        let cfg = QuadConfig { budget: 50 };
        let r = integrate_finite_with(
            |x: f64| (50.0 * x).sin(),
            0.0,
            10.0,
            1e-14,
            SingularEndpoints::NONE,
            &cfg,
        );
        assert!(matches!(r, Err(NumError::BudgetExceeded { .. })));
    }

    #[test]
    fn rejects_bad_interval_and_nan() {
        assert!(integrate_finite(|x| x, 1.0, 0.0, 1e-10, SingularEndpoints::NONE).is_err());
        assert!(integrate_finite(|_| f64::NAN, 0.0, 1.0, 1e-10, SingularEndpoints::NONE).is_err());
    }
}
