//! Bernoulli numbers (exact rationals) and Bernoulli polynomials.

use std::sync::OnceLock;

use num_rational::Ratio;

use crate::error::{domain, Result};

/// Largest Bernoulli number index held in the table.
pub const BERNOULLI_MAX: usize = 30;

/// Largest polynomial degree accepted by [`bernoulli_poly`].
pub const POLY_MAX: usize = 12;

type Q = Ratio<i128>;

struct Tables {
    numbers: Vec<Q>,
    numbers_f64: Vec<f64>,
    // poly[n][j] is the coefficient of x^j in B_n(x)
    poly: Vec<Vec<f64>>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(build)
}

fn binomial(n: usize, k: usize) -> i128 {
    let mut c: i128 = 1;
    for i in 0..k {
        c = c * (n - i) as i128 / (i + 1) as i128;
    }
    c
}

fn build() -> Tables {
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0 for n ≥ 1, with B_1 = −½.
    let mut numbers: Vec<Q> = vec![Q::from_integer(1)];
    for n in 1..=BERNOULLI_MAX {
        let mut acc = Q::from_integer(0);
        for (k, bk) in numbers.iter().enumerate() {
            acc += *bk * binomial(n + 1, k);
        }
        numbers.push(-acc / Q::from_integer((n + 1) as i128));
    }
    let numbers_f64 = numbers
        .iter()
        .map(|q| *q.numer() as f64 / *q.denom() as f64)
        .collect();
    let poly = (0..=POLY_MAX)
        .map(|n| {
            let mut c = vec![0.0; n + 1];
            for (k, bk) in numbers.iter().enumerate().take(n + 1) {
                let q = *bk * binomial(n, k);
                c[n - k] = *q.numer() as f64 / *q.denom() as f64;
            }
            c
        })
        .collect();
    Tables {
        numbers,
        numbers_f64,
        poly,
    }
}

/// Bernoulli number B_n as f64 (convention B_1 = −½), n ≤ [`BERNOULLI_MAX`].
pub fn bernoulli_number(n: usize) -> f64 {
    tables().numbers_f64[n]
}

/// Exact Bernoulli number as (numerator, denominator).
pub fn bernoulli_exact(n: usize) -> (i128, i128) {
    let q = tables().numbers[n];
    (*q.numer(), *q.denom())
}

/// Bernoulli polynomial B_n(x), 0 ≤ n ≤ 12.
pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    if n > POLY_MAX {
        return Err(domain(format!(
            "Bernoulli polynomial degree {n} exceeds {POLY_MAX}"
        )));
    }
    let c = &tables().poly[n];
    Ok(c.iter().rev().fold(0.0, |acc, &cj| acc * x + cj))
}

/// Periodic Bernoulli function B_n({x}); at integers B_1 takes the mean value 0.
pub fn bernoulli_poly_periodic(n: usize, x: f64) -> Result<f64> {
    let frac = x - x.floor();
    if n == 1 && frac == 0.0 {
        return Ok(0.0);
    }
    bernoulli_poly(n, frac)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_numbers_exact() {
        assert_eq!(bernoulli_exact(0), (1, 1));
        assert_eq!(bernoulli_exact(1), (-1, 2));
        assert_eq!(bernoulli_exact(2), (1, 6));
        assert_eq!(bernoulli_exact(3), (0, 1));
        assert_eq!(bernoulli_exact(4), (-1, 30));
        assert_eq!(bernoulli_exact(12), (-691, 2730));
        assert_eq!(bernoulli_exact(30), (8_615_841_276_005, 14_322));
    }

    #[test]
    fn odd_numbers_vanish() {
        for n in (3..=BERNOULLI_MAX).step_by(2) {
            assert_eq!(bernoulli_exact(n).0, 0, "B_{n}");
        }
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(bernoulli_poly(1, 0.25).unwrap(), -0.25);
        assert!(bernoulli_poly(3, 0.5).unwrap().abs() < 1e-16);
        // B_2(x) = x² − x + 1/6
        let x = 0.3;
        assert!((bernoulli_poly(2, x).unwrap() - (x * x - x + 1.0 / 6.0)).abs() < 1e-16);
        assert!(bernoulli_poly(13, 0.0).is_err());
    }

    #[test]
    fn endpoint_values_are_numbers() {
        for n in 2..=POLY_MAX {
            let b0 = bernoulli_poly(n, 0.0).unwrap();
            let b1 = bernoulli_poly(n, 1.0).unwrap();
            assert!((b0 - bernoulli_number(n)).abs() < 1e-12);
            assert!((b1 - b0).abs() < 1e-10, "B_{n}(1) = B_{n}(0)");
        }
    }

    #[test]
    fn periodic_extension() {
        assert_eq!(bernoulli_poly_periodic(1, 3.0).unwrap(), 0.0);
        let a = bernoulli_poly_periodic(2, 2.25).unwrap();
        let b = bernoulli_poly(2, 0.25).unwrap();
        assert!((a - b).abs() < 1e-15);
    }
}
