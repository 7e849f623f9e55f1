//! Barnes G via its Weierstrass-type series.

use super::{hurwitz_zeta, Approximation, EULER_GAMMA};
use crate::error::{domain, Result};

const EPS: f64 = f64::EPSILON;

/// log G(1+x), taking the argument 1+x > 0.
///
/// log G(1+x) = ½x log 2π − ½x(1+x) − ½γx² + Σ_{n≥1} [x²/(2n) − x + n log(1+x/n)].
/// The first N terms are summed directly; the remainder is
/// Σ_{k≥1} (−1)^{k+1} x^{k+2}/(k+2) · ζ(k+1, N+1).
pub fn log_barnes_g(one_plus_x: f64) -> Result<Approximation> {
    if !(one_plus_x > 0.0) || !one_plus_x.is_finite() {
        return Err(domain(format!(
            "log G requires a positive argument, got {one_plus_x}"
        )));
    }
    let x = one_plus_x - 1.0;
    if x == 0.0 {
        return Ok(Approximation::new(0.0, 0.0, 1));
    }
    let n_direct = 16usize.max((8.0 * x.abs()).ceil() as usize);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for n in 1..=n_direct {
        let t = summand(x, n as f64);
        sum += t;
        mag += t.abs();
    }
    let mut tail = 0.0;
    let mut zeta_err = 0.0;
    let mut work = n_direct;
    let q = (n_direct + 1) as f64;
    let mut xp = x * x * x;
    for k in 1..200 {
        let z = hurwitz_zeta((k + 1) as f64, q)?;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * xp / (k + 2) as f64 * z.value;
        tail += term;
        zeta_err += (xp / (k + 2) as f64).abs() * z.abs_err;
        work += z.work;
        if term.abs() < 1e-3 * EPS * (sum.abs() + tail.abs()).max(1e-300) {
            break;
        }
        xp *= x;
    }
    let lead = 0.5 * x * (2.0 * std::f64::consts::PI).ln()
        - 0.5 * x * (1.0 + x)
        - 0.5 * EULER_GAMMA * x * x;
    let value = lead + sum + tail;
    let err = 8.0 * EPS * (lead.abs() + mag + tail.abs()) + zeta_err;
    Ok(Approximation::new(value, err, work))
}

/// x²/(2n) − x + n log(1+x/n), by its power series when x/n is small.
fn summand(x: f64, n: f64) -> f64 {
    let r = x / n;
    if r.abs() >= 0.5 {
        return x * x / (2.0 * n) - x + n * r.ln_1p();
    }
    // Σ_{k≥1} (−1)^{k+1} x r^{k+1} / (k+2)
    let mut s = 0.0;
    let mut rp = r * r;
    let mut k = 1;
    loop {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let t = sign * x * rp / (k + 2) as f64;
        s += t;
        if t.abs() <= EPS * 1e-2 * s.abs() || k > 200 {
            break;
        }
        rp *= r;
        k += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(log_barnes_g(1.0).unwrap().value, 0.0);
        assert!(log_barnes_g(2.0).unwrap().value.abs() < 1e-13);
        // G(3) = 1, G(4) = 2, G(5) = 12
        assert!(log_barnes_g(3.0).unwrap().value.abs() < 1e-12);
        assert!((log_barnes_g(4.0).unwrap().value - 2f64.ln()).abs() < 1e-12);
        assert!((log_barnes_g(5.0).unwrap().value - 12f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn half_integer_value() {
        // mpmath: log G(2.5) = −0.05385034920024051807
        assert!((log_barnes_g(2.5).unwrap().value + 0.053_850_349_200_240_52).abs() < 1e-12);
    }

    #[test]
    fn summand_branches_agree() {
        for &(x, n) in &[(0.3f64, 1.0f64), (1.2, 3.0), (-0.7, 2.0)] {
            let direct = x * x / (2.0 * n) - x + n * (x / n).ln_1p();
            assert!((summand(x, n) - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn domain() {
        assert!(log_barnes_g(0.0).is_err());
        assert!(log_barnes_g(-1.0).is_err());
    }
}
