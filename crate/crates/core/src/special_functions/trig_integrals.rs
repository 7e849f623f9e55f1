//! Si, si and Ci.
//!
//! Power series up to x = 4; beyond that the exponential integral E1(ix)
//! is evaluated by its continued fraction, which gives
//! E1(ix) = −Ci(x) + i·si(x) directly.

use num_complex::Complex64;

use super::{Approximation, EULER_GAMMA};
use crate::error::{domain, Result};

const SERIES_LIMIT: f64 = 4.0;
const CF_MAX_ITER: usize = 10_000;
const EPS: f64 = f64::EPSILON;

/// Sine integral Si(x) = ∫₀ˣ sin t / t dt for x ≥ 0.
///
/// Accuracy is near machine precision for x ≤ 1e6; for larger x the
/// reduction of cos x and sin x loses about log10(x) − 15 digits of
/// the oscillating correction, which is itself O(1/x).
pub fn sine_integral(x: f64) -> Result<Approximation> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("Si requires finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(Approximation::new(0.0, 0.0, 1));
    }
    if x <= SERIES_LIMIT {
        let (si, _, work, err) = series(x);
        return Ok(Approximation::new(si, err, work));
    }
    let (_, si_shift, work) = continued_fraction(x);
    let v = std::f64::consts::FRAC_PI_2 + si_shift;
    Ok(Approximation::new(v, 4.0 * EPS * v.abs().max(1.0), work))
}

/// Shifted sine integral si(x) = Si(x) − π/2 = −∫ₓ^∞ sin t / t dt, x > 0.
pub fn shifted_sine_integral(x: f64) -> Result<Approximation> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("si requires finite x > 0, got {x}")));
    }
    if x <= SERIES_LIMIT {
        let (si, _, work, err) = series(x);
        let v = si - std::f64::consts::FRAC_PI_2;
        return Ok(Approximation::new(v, err + 2.0 * EPS, work));
    }
    let (_, s, work) = continued_fraction(x);
    Ok(Approximation::new(s, 8.0 * EPS * s.abs() + EPS / x, work))
}

/// Cosine integral Ci(x) = γ + log x + ∫₀ˣ (cos t − 1)/t dt, x > 0.
pub fn cosine_integral(x: f64) -> Result<Approximation> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("Ci requires finite x > 0, got {x}")));
    }
    if x <= SERIES_LIMIT {
        let (_, c, work, err) = series(x);
        let v = EULER_GAMMA + x.ln() + c;
        return Ok(Approximation::new(
            v,
            err + 2.0 * EPS * (1.0 + x.ln().abs()),
            work,
        ));
    }
    let (c, _, work) = continued_fraction(x);
    Ok(Approximation::new(c, 8.0 * EPS * c.abs() + EPS / x, work))
}

/// Returns (Si(x), Σ_{k≥1} (−1)^k x^{2k}/(2k·(2k)!), terms, rounding estimate).
fn series(x: f64) -> (f64, f64, usize, f64) {
    let mut si = 0.0;
    let mut ci = 0.0;
    let mut abs_sum = 0.0;
    // p = x^k / k!; odd k feed Si, even k feed the cosine part, sign (−1)^⌊k/2⌋
    let mut p = x;
    let mut k = 1usize;
    loop {
        let sign = if (k / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        let term = sign * p / k as f64;
        if k % 2 == 1 {
            si += term;
        } else {
            ci += term;
        }
        abs_sum += term.abs();
        if term.abs() < 1e-3 * EPS * (si.abs() + ci.abs()) {
            break;
        }
        k += 1;
        p *= x / k as f64;
    }
    (si, ci, k, 2.0 * EPS * abs_sum)
}

/// Modified Lentz evaluation of E1(ix) = e^{−ix}/(1 + ix − 1²/(3 + ix − 2²/(5 + ix − …))).
fn continued_fraction(x: f64) -> (f64, f64, usize) {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    let mut iters = 1;
    for i in 2..CF_MAX_ITER {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = Complex64::new(1.0, 0.0) / (d * a + b);
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        iters = i;
        if (del - 1.0).norm() < EPS {
            break;
        }
    }
    let e1 = Complex64::new(x.cos(), -x.sin()) * h;
    (-e1.re, e1.im, iters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn si_at_zero_and_pi() {
        assert_eq!(sine_integral(0.0).unwrap().value, 0.0);
        // Gauss–Legendre oracle of ∫₀^π sin t/t dt
        let v = sine_integral(PI).unwrap().value;
        assert!((v - 1.851_937_051_982_466_2).abs() < 1e-14);
    }

    #[test]
    fn series_and_fraction_agree_at_switch() {
        for &x in &[3.9, 4.0, 4.1, 5.0] {
            let (s, c, _, _) = series(x);
            let (cf_c, cf_s, _) = continued_fraction(x);
            assert!((s - FRAC_PI_2 - cf_s).abs() < 1e-14, "si at {x}");
            assert!((EULER_GAMMA + x.ln() + c - cf_c).abs() < 1e-14, "ci at {x}");
        }
    }

    #[test]
    fn known_values() {
        let ci = cosine_integral(PI).unwrap().value;
        assert!((ci - 0.073_667_912_046_425_49).abs() < 1e-14);
        let ci2 = cosine_integral(2.0 * PI).unwrap().value;
        assert!((ci2 + 0.022_560_661_746_346_07).abs() < 1e-14);
        let s2 = shifted_sine_integral(2.0 * PI).unwrap().value;
        assert!((s2 + 0.152_644_750_662_268_17).abs() < 1e-14);
    }

    #[test]
    fn large_argument_limits() {
        let x = 1e6;
        assert!((sine_integral(x).unwrap().value - FRAC_PI_2).abs() < 2e-6);
        assert!(shifted_sine_integral(x).unwrap().value.abs() < 2e-6);
        assert!(cosine_integral(x).unwrap().value.abs() < 2e-6);
        // leading asymptotics sin x / x − cos x / x²
        let x = 2000.0f64;
        let asym = x.sin() / x - x.cos() / (x * x);
        assert!((cosine_integral(x).unwrap().value - asym).abs() < 1e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(sine_integral(-1.0).is_err());
        assert!(sine_integral(f64::NAN).is_err());
        assert!(shifted_sine_integral(0.0).is_err());
        assert!(cosine_integral(0.0).is_err());
        assert!(cosine_integral(f64::INFINITY).is_err());
    }
}
