//! Series acceleration: Euler averaging, iterated Aitken Δ², and
//! Richardson extrapolation on partial sums at N, 2N, 4N, …

use num_complex::Complex64;

use crate::error::{domain, NumError, Result};
use crate::extrapolate::richardson;
use crate::special_functions::Approximation;

const EPS: f64 = f64::EPSILON;
const AITKEN_DEPTH: usize = 8;
const DEFAULT_MAX_TERMS: usize = 8192;
const RICHARDSON_BASE: usize = 16;

/// Acceleration strategy for [`accelerate_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccelMode {
    /// Choose from the sign pattern and decay of the first terms.
    Auto,
    Euler,
    Aitken,
    Richardson,
}

/// Estimates Σ_{n≥1} term(n) with the default term budget.
pub fn accelerate_series(
    term: impl Fn(usize) -> f64,
    mode: AccelMode,
    tol: f64,
) -> Result<Approximation> {
    accelerate_series_with(term, mode, tol, DEFAULT_MAX_TERMS)
}

/// Estimates Σ_{n≥1} term(n) using at most `max_terms` terms.
pub fn accelerate_series_with(
    term: impl Fn(usize) -> f64,
    mode: AccelMode,
    tol: f64,
    max_terms: usize,
) -> Result<Approximation> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let max_terms = max_terms.max(64);
    let mut sums = PartialSums::new(&term);
    let mode = match mode {
        AccelMode::Auto => detect(&mut sums)?,
        m => m,
    };
    match mode {
        AccelMode::Aitken => aitken_series(&mut sums, tol, max_terms)
            .or_else(|_| euler_series(&mut sums, tol, max_terms)),
        AccelMode::Euler => euler_series(&mut sums, tol, max_terms),
        AccelMode::Richardson => richardson_series(&mut sums, tol, max_terms),
        AccelMode::Auto => unreachable!("resolved above"),
    }
}

/// Compensated partial sums S_1, S_2, … of a real series, grown on demand.
struct PartialSums<'a, F: Fn(usize) -> f64> {
    term: &'a F,
    terms: Vec<f64>,
    sums: Vec<f64>,
    run: f64,
    comp: f64,
}

impl<'a, F: Fn(usize) -> f64> PartialSums<'a, F> {
    fn new(term: &'a F) -> Self {
        PartialSums {
            term,
            terms: Vec::new(),
            sums: Vec::new(),
            run: 0.0,
            comp: 0.0,
        }
    }

    fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.sums.len() < n {
            let k = self.sums.len() + 1;
            let t = (self.term)(k);
            if !t.is_finite() {
                return Err(domain(format!("series term {k} is not finite")));
            }
            // Neumaier summation
            let u = self.run + t;
            if self.run.abs() >= t.abs() {
                self.comp += (self.run - u) + t;
            } else {
                self.comp += (t - u) + self.run;
            }
            self.run = u;
            self.terms.push(t);
            self.sums.push(self.run + self.comp);
        }
        Ok(())
    }

    fn sum(&mut self, n: usize) -> Result<f64> {
        self.extend_to(n)?;
        Ok(self.sums[n - 1])
    }

    fn term(&mut self, n: usize) -> Result<f64> {
        self.extend_to(n)?;
        Ok(self.terms[n - 1])
    }

    fn window(&mut self, n: usize, len: usize) -> Result<&[f64]> {
        self.extend_to(n)?;
        Ok(&self.sums[n - len..n])
    }
}

fn detect<F: Fn(usize) -> f64>(sums: &mut PartialSums<'_, F>) -> Result<AccelMode> {
    sums.extend_to(64)?;
    let t = &sums.terms;
    let tail = &t[31..64];
    if tail.iter().all(|&x| x == 0.0) {
        return Ok(AccelMode::Aitken);
    }
    let alternating = tail.windows(2).all(|w| w[0] * w[1] < 0.0);
    if alternating {
        return Ok(AccelMode::Aitken);
    }
    let ratios: Vec<f64> = tail.windows(2).map(|w| (w[1] / w[0]).abs()).collect();
    let geometric = ratios.iter().all(|r| r.is_finite() && *r < 0.95)
        && ratios.windows(2).all(|w| (w[1] - w[0]).abs() < 0.05);
    if geometric {
        return Ok(AccelMode::Aitken);
    }
    Ok(AccelMode::Richardson)
}

/// Iterated Aitken Δ² on a window of partial sums; one value per call.
pub(crate) fn iterated_aitken(window: &[Complex64]) -> Complex64 {
    let mut s: Vec<Complex64> = window.to_vec();
    while s.len() >= 3 {
        s = s
            .windows(3)
            .map(|w| {
                let d1 = w[2] - w[1];
                let d2 = w[2] - 2.0 * w[1] + w[0];
                if d2.norm() <= 1e-300 || !(d1 * d1 / d2).is_finite() {
                    w[2]
                } else {
                    w[2] - d1 * d1 / d2
                }
            })
            .collect();
    }
    *s.last().expect("window is non-empty")
}

/// Repeated averaging of neighbouring partial sums.
pub(crate) fn euler_average(window: &[f64]) -> f64 {
    let mut s = window.to_vec();
    while s.len() > 1 {
        s = s.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    s[0]
}

fn aitken_series<F: Fn(usize) -> f64>(
    sums: &mut PartialSums<'_, F>,
    tol: f64,
    max_terms: usize,
) -> Result<Approximation> {
    let w = 2 * AITKEN_DEPTH + 1;
    let estimate = |sums: &mut PartialSums<'_, F>, n: usize| -> Result<f64> {
        let window: Vec<Complex64> = sums
            .window(n, w)?
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        Ok(iterated_aitken(&window).re)
    };
    let mut n = 2 * w;
    let mut prev = estimate(sums, n)?;
    loop {
        // terms below tolerance and shrinking: plain summation is enough
        let tn = sums.term(n)?.abs();
        if tn < tol * 1e-6 && sums.term(n - 1)?.abs() < tol * 1e-6 {
            let v = sums.sum(n)?;
            return Ok(Approximation::new(v, tn * 10.0 + EPS * v.abs(), n));
        }
        let next_n = n + n / 2;
        if next_n > max_terms {
            return Err(NumError::BudgetExceeded {
                best: prev,
                err: f64::INFINITY,
                evals: n,
            });
        }
        let cur = estimate(sums, next_n)?;
        let diff = (cur - prev).abs();
        if diff <= 0.25 * tol || diff <= 16.0 * EPS * cur.abs() {
            return Ok(Approximation::new(
                cur,
                diff.max(4.0 * EPS * cur.abs()),
                next_n,
            ));
        }
        prev = cur;
        n = next_n;
    }
}

fn euler_series<F: Fn(usize) -> f64>(
    sums: &mut PartialSums<'_, F>,
    tol: f64,
    max_terms: usize,
) -> Result<Approximation> {
    let estimate = |sums: &mut PartialSums<'_, F>, n: usize| -> Result<f64> {
        let l = (n / 2).min(60);
        Ok(euler_average(sums.window(n, l)?))
    };
    let mut n = 40;
    let mut prev = estimate(sums, n)?;
    loop {
        let next_n = n + 20;
        if next_n > max_terms {
            return Err(NumError::BudgetExceeded {
                best: prev,
                err: f64::INFINITY,
                evals: n,
            });
        }
        let cur = estimate(sums, next_n)?;
        let diff = (cur - prev).abs();
        if diff <= 0.25 * tol || diff <= 16.0 * EPS * cur.abs() {
            return Ok(Approximation::new(
                cur,
                diff.max(4.0 * EPS * cur.abs()),
                next_n,
            ));
        }
        prev = cur;
        n = next_n;
    }
}

/// Tail exponent λ with S − S_N ~ c N^{−λ}, from the decay of the terms.
fn tail_exponent<F: Fn(usize) -> f64>(sums: &mut PartialSums<'_, F>, n: usize) -> Result<f64> {
    let (a, b) = (sums.term(n / 2)?, sums.term(n)?);
    if a == 0.0 || b == 0.0 || a * b < 0.0 {
        return Ok(1.0);
    }
    let p = (a / b).abs().log2();
    let lambda = p - 1.0;
    if !(lambda > 0.0) {
        return Err(NumError::Divergence(format!(
            "terms decay like n^-{p:.3}; series does not converge"
        )));
    }
    let r = lambda.round();
    Ok(if (lambda - r).abs() < 0.03 && r >= 1.0 {
        r
    } else {
        lambda
    })
}

fn richardson_series<F: Fn(usize) -> f64>(
    sums: &mut PartialSums<'_, F>,
    tol: f64,
    max_terms: usize,
) -> Result<Approximation> {
    let mut depth = 4;
    let mut last: Option<(f64, f64, usize)> = None;
    while RICHARDSON_BASE << depth <= max_terms.max(RICHARDSON_BASE << 4) {
        let top = RICHARDSON_BASE << depth;
        let lambda = tail_exponent(sums, top)?;
        let values: Vec<f64> = (0..=depth)
            .map(|k| sums.sum(RICHARDSON_BASE << k))
            .collect::<Result<_>>()?;
        let ext = richardson(&values, 0.0, 2.0, |j| lambda + (j as f64 - 1.0));
        if ext.err <= 0.25 * tol {
            return Ok(Approximation::new(ext.value, ext.err, top));
        }
        last = Some((ext.value, ext.err, top));
        depth += 1;
    }
    let (best, err, evals) = last.expect("at least one ladder evaluated");
    if err <= tol {
        return Ok(Approximation::new(best, err, evals));
    }
    Err(NumError::BudgetExceeded { best, err, evals })
}

/// Σ_{n≥1} c(n) for Fourier-type terms whose phases rotate by a fixed
/// unimodular ratio (c(n) ≈ w(n)·zⁿ with w smooth), by iterated Aitken on
/// the complex partial sums.
pub fn sum_unimodular(
    c: impl Fn(usize) -> Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<(Complex64, f64, usize)> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let w = 2 * AITKEN_DEPTH + 1;
    let mut partial: Vec<Complex64> = Vec::new();
    let mut s = Complex64::new(0.0, 0.0);
    let mut grow = |partial: &mut Vec<Complex64>, n: usize| -> Result<()> {
        while partial.len() < n {
            let k = partial.len() + 1;
            let t = c(k);
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(domain(format!("series term {k} is not finite")));
            }
            s += t;
            partial.push(s);
        }
        Ok(())
    };
    let mut n = 4 * w;
    grow(&mut partial, n)?;
    let mut prev = iterated_aitken(&partial[n - w..n]);
    loop {
        let next_n = n + n / 2;
        if next_n > max_terms.max(4 * w) {
            return Err(NumError::BudgetExceeded {
                best: prev.re,
                err: f64::INFINITY,
                evals: n,
            });
        }
        grow(&mut partial, next_n)?;
        let cur = iterated_aitken(&partial[next_n - w..next_n]);
        let diff = (cur - prev).norm();
        if diff <= 0.25 * tol || diff <= 64.0 * EPS * cur.norm() {
            return Ok((cur, diff.max(8.0 * EPS * cur.norm()), next_n));
        }
        prev = cur;
        n = next_n;
    }
}
