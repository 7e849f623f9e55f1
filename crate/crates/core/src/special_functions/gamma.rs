//! ψ, ψ^{(p)} and log Γ by upward recurrence followed by asymptotic series.

use super::bernoulli::bernoulli_number;
use super::Approximation;
use crate::error::{domain, Result};

const EPS: f64 = f64::EPSILON;
const DIGAMMA_SHIFT: f64 = 10.0;
const POLYGAMMA_SHIFT: f64 = 15.0;
const LOG_GAMMA_SHIFT: f64 = 10.0;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn check_positive(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("{name} requires finite x > 0, got {x}")));
    }
    Ok(())
}

/// Digamma ψ(x) for x > 0.
pub fn digamma(x: f64) -> Result<Approximation> {
    check_positive("digamma", x)?;
    let mut z = x;
    let mut shift = 0.0;
    let mut abs_acc = 0.0;
    let mut work = 0;
    while z < DIGAMMA_SHIFT {
        shift += 1.0 / z;
        z += 1.0;
        work += 1;
    }
    abs_acc += shift.abs();
    // ψ(z) ~ log z − 1/(2z) − Σ B_{2k} / (2k z^{2k})
    let z2 = 1.0 / (z * z);
    let mut zp = z2;
    let mut asym = z.ln() - 0.5 / z;
    abs_acc += asym.abs();
    for k in 1..=6 {
        asym -= bernoulli_number(2 * k) / (2 * k) as f64 * zp;
        zp *= z2;
        work += 1;
    }
    let value = asym - shift;
    Ok(Approximation::new(value, 4.0 * EPS * abs_acc, work.max(1)))
}

/// Polygamma ψ^{(p)}(x) for p ∈ {1, 2, 3, 4} and x > 0.
pub fn polygamma(p: u32, x: f64) -> Result<Approximation> {
    if !(1..=4).contains(&p) {
        return Err(domain(format!("polygamma order {p} outside 1..=4")));
    }
    check_positive("polygamma", x)?;
    let pf = p as i32;
    let fact = |n: i32| (1..=n).map(|i| i as f64).product::<f64>();
    let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
    // ψ^{(p)}(x) = ψ^{(p)}(x+n) + (−1)^{p+1} p! Σ_{k<n} (x+k)^{−p−1}
    let mut z = x;
    let mut direct = 0.0;
    let mut work = 0;
    while z < POLYGAMMA_SHIFT {
        direct += z.powi(-pf - 1);
        z += 1.0;
        work += 1;
    }
    // (−1)^{p+1} [ (p−1)!/z^p + p!/(2 z^{p+1}) + Σ B_{2k} (2k+p−1)!/((2k)! z^{2k+p}) ]
    let mut asym = fact(pf - 1) / z.powi(pf) + fact(pf) / (2.0 * z.powi(pf + 1));
    for k in 1..=8 {
        let k2 = 2 * k;
        let coeff = bernoulli_number(k2 as usize) * fact(k2 + pf - 1) / fact(k2);
        asym += coeff / z.powi(k2 + pf);
        work += 1;
    }
    let value = sign * (fact(pf) * direct + asym);
    Ok(Approximation::new(value, 8.0 * EPS * value.abs(), work))
}

/// log Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<Approximation> {
    check_positive("log_gamma", x)?;
    let mut z = x;
    let mut prod = 1.0;
    let mut work = 0;
    while z < LOG_GAMMA_SHIFT {
        prod *= z;
        z += 1.0;
        work += 1;
    }
    // Stirling: (z−½)log z − z + ½log 2π + Σ B_{2k}/(2k(2k−1) z^{2k−1})
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let mut zp = zi;
    let lead = (z - 0.5) * z.ln() - z + HALF_LN_2PI;
    let mut corr = 0.0;
    for k in 1..=7 {
        let k2 = 2 * k;
        corr += bernoulli_number(k2) / (k2 * (k2 - 1)) as f64 * zp;
        zp *= zi2;
        work += 1;
    }
    let shift = prod.ln();
    let value = lead + corr - shift;
    let err = 4.0 * EPS * (lead.abs() + shift.abs());
    Ok(Approximation::new(value, err, work))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const GAMMA: f64 = super::super::EULER_GAMMA;

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap().value + GAMMA).abs() < 1e-15);
        let half = digamma(0.5).unwrap().value;
        assert!((half - (-GAMMA - 2.0 * 2f64.ln())).abs() < 1e-14);
        assert!((digamma(2.0).unwrap().value - (1.0 - GAMMA)).abs() < 1e-15);
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
    }

    #[test]
    fn digamma_near_root_and_small() {
        // ψ(x₀) = 0 at x₀ = 1.4616321449683623
        assert!(digamma(1.461_632_144_968_362_3).unwrap().value.abs() < 1e-15);
        // ψ(x) ≈ −1/x − γ for tiny x
        let x = 1e-9;
        assert!((digamma(x).unwrap().value - (-1.0 / x - GAMMA)).abs() < 1e-6);
    }

    #[test]
    fn polygamma_values() {
        let z2 = PI * PI / 6.0;
        assert!((polygamma(1, 1.0).unwrap().value - z2).abs() < 1e-14);
        // −2ζ(3), ζ(3) = 1.2020569031595942
        assert!((polygamma(2, 1.0).unwrap().value + 2.0 * 1.202_056_903_159_594_2).abs() < 1e-13);
        assert!((polygamma(1, 0.25).unwrap().value - 17.197_329_154_507_11).abs() < 1e-12);
        // ψ‴(1) = 6ζ(4) = π⁴/15
        assert!((polygamma(3, 1.0).unwrap().value - PI.powi(4) / 15.0).abs() < 1e-12);
        // ψ⁗(1) = −24ζ(5), ζ(5) = 1.0369277551433699
        assert!((polygamma(4, 1.0).unwrap().value + 24.0 * 1.036_927_755_143_37).abs() < 1e-11);
        assert!(polygamma(0, 1.0).is_err());
        assert!(polygamma(5, 1.0).is_err());
    }

    #[test]
    fn log_gamma_values() {
        for x in [1.0, 2.0] {
            let r = log_gamma(x).unwrap();
            assert!(r.value.abs() < 1e-14 && r.value.abs() <= r.abs_err, "{r:?}");
        }
        let half = log_gamma(0.5).unwrap().value;
        assert!((half - 0.5 * PI.ln()).abs() < 1e-14);
        // log 10! = log Γ(11)
        let f: f64 = (1..=10).map(|i| i as f64).product();
        assert!((log_gamma(11.0).unwrap().value - f.ln()).abs() < 1e-13);
        assert!((log_gamma(100.5).unwrap().value - 361.435_540_467_777_6).abs() < 1e-11);
    }
}
