//! Hurwitz zeta ζ(s, a) and its first two s-derivatives by Euler–Maclaurin.
//!
//! ζ(s,a) = Σ_{k<M} (a+k)^{−s} + N^{1−s}/(s−1) + ½N^{−s}
//!        + Σ_{j=1}^{J} B_{2j}/(2j)! (s)_{2j−1} N^{−s−2j+1},   N = a + M,
//! with every piece carried as a second-order jet in s so that the
//! derivatives come out of the same pass.

use super::bernoulli::bernoulli_number;
use super::Approximation;
use crate::error::{domain, NumError, Result};

const EPS: f64 = f64::EPSILON;
const J_DEFAULT: usize = 6;
const J_MAX_NEGATIVE: usize = 12;

/// Value and first two derivatives with respect to s.
#[derive(Debug, Clone, Copy, Default)]
struct Jet {
    v: f64,
    d1: f64,
    d2: f64,
}

impl Jet {
    fn new(v: f64, d1: f64, d2: f64) -> Self {
        Jet { v, d1, d2 }
    }

    /// Jet of N^{−s} (times a constant) given L = log N.
    fn power(w: f64, l: f64) -> Self {
        Jet::new(w, -l * w, l * l * w)
    }

    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        )
    }

    fn scale(self, c: f64) -> Jet {
        Jet::new(self.v * c, self.d1 * c, self.d2 * c)
    }

    fn add(self, o: Jet) -> Jet {
        Jet::new(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)
    }

    fn abs(self) -> Jet {
        Jet::new(self.v.abs(), self.d1.abs(), self.d2.abs())
    }

    fn get(self, m: u32) -> f64 {
        match m {
            0 => self.v,
            1 => self.d1,
            _ => self.d2,
        }
    }
}

/// Euler–Maclaurin pieces for one (s, a, M).
struct Em {
    /// Everything except the pole term N^{1−s}/(s−1).
    regular: Jet,
    /// Magnitudes of all summed pieces, for the rounding estimate.
    magnitude: Jet,
    /// Size of the first omitted Bernoulli term.
    truncation: Jet,
    n: f64,
    work: usize,
}

fn em_regular(s: f64, a: f64, m_cut: usize, j_max: usize) -> Em {
    let mut regular = Jet::default();
    let mut magnitude = Jet::default();
    for k in 0..m_cut {
        let x = a + k as f64;
        let l = x.ln();
        let t = Jet::power((-s * l).exp(), l);
        regular = regular.add(t);
        magnitude = magnitude.add(t.abs());
    }
    let n = a + m_cut as f64;
    let l = n.ln();
    let half = Jet::power(0.5 * (-s * l).exp(), l);
    regular = regular.add(half);
    magnitude = magnitude.add(half.abs());

    // P_j = (s)_{2j−1} N^{−s−2j+1}
    let s_jet = |c: f64| Jet::new(s + c, 1.0, 0.0);
    let mut p = s_jet(0.0).mul(Jet::power((-(s + 1.0) * l).exp(), l));
    let mut fact = 2.0; // (2j)!
    let mut truncation = Jet::default();
    for j in 1..=j_max + 1 {
        let term = p.scale(bernoulli_number(2 * j) / fact);
        if j > j_max {
            truncation = term.abs();
            break;
        }
        regular = regular.add(term);
        magnitude = magnitude.add(term.abs());
        let c = (2 * j) as f64;
        p = p.mul(s_jet(c - 1.0)).mul(s_jet(c)).scale(1.0 / (n * n));
        fact *= (c + 1.0) * (c + 2.0);
    }
    Em {
        regular,
        magnitude,
        truncation,
        n,
        work: m_cut + j_max,
    }
}

/// N^{1−s}/(s−1) as a jet.
fn pole_term(s: f64, n: f64) -> Jet {
    let u = s - 1.0;
    let l = n.ln();
    let w = (-u * l).exp();
    Jet::new(
        w / u,
        -l * w / u - w / (u * u),
        l * l * w / u + 2.0 * l * w / (u * u) + 2.0 * w / (u * u * u),
    )
}

fn default_cut(s: f64) -> usize {
    10usize.max(s.abs().ceil() as usize + 10)
}

/// Estimated total error of one evaluation with the given cut.
fn em_error(em: &Em, pole_mag: Jet, m: u32) -> f64 {
    em.truncation.get(m) + 4.0 * EPS * (em.magnitude.get(m) + pole_mag.get(m))
}

fn check_args(m: u32, s: f64, a: f64) -> Result<()> {
    if m > 2 {
        return Err(domain(format!("derivative order {m} outside 0..=2")));
    }
    if !s.is_finite() {
        return Err(domain(format!("s must be finite, got {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(format!("Hurwitz zeta requires a > 0, got {a}")));
    }
    Ok(())
}

/// ∂^m/∂s^m ζ(s, a) for m ∈ {0, 1, 2}, real s ≠ 1 and a > 0.
pub fn hurwitz_zeta_deriv(m: u32, s: f64, a: f64) -> Result<Approximation> {
    check_args(m, s, a)?;
    if s == 1.0 {
        return Err(NumError::Pole("s = 1".into()));
    }
    let evaluate = |cut: usize, j: usize| {
        let em = em_regular(s, a, cut, j);
        let pole = pole_term(s, em.n);
        let err = em_error(&em, pole.abs(), m);
        (em.regular.add(pole).get(m), err, em.work)
    };
    let (value, err, work) = if s >= 0.0 {
        evaluate(default_cut(s), J_DEFAULT)
    } else {
        best_cut(s, |cut| evaluate(cut, J_MAX_NEGATIVE))
    };
    Ok(Approximation::new(value, err, work))
}

/// ζ(s, a).
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<Approximation> {
    hurwitz_zeta_deriv(0, s, a)
}

/// For s < 0 the direct sum grows like M^{1−s}; pick the cut that
/// balances rounding against the Bernoulli truncation.
fn best_cut(s: f64, eval: impl Fn(usize) -> (f64, f64, usize)) -> (f64, f64, usize) {
    let mut best = eval(1);
    let mut work = best.2;
    for cut in 2..=default_cut(s) {
        let r = eval(cut);
        work += r.2;
        if r.1 < best.1 {
            best = r;
        }
    }
    (best.0, best.1, work)
}

/// Alternating Hurwitz zeta ζ_a(s, a) = Σ (−1)^n (n+a)^{−s}
/// = 2^{−s}[ζ(s, a/2) − ζ(s, (a+1)/2)], entire in s.
pub fn alternating_hurwitz(s: f64, a: f64) -> Result<Approximation> {
    check_args(0, s, a)?;
    let (a1, a2) = (0.5 * a, 0.5 * (a + 1.0));
    let evaluate = |cut: usize, j: usize| {
        let e1 = em_regular(s, a1, cut, j);
        let e2 = em_regular(s, a2, cut, j);
        // N1^{1−s}/(s−1) − N2^{1−s}/(s−1) with the poles paired off
        let u = s - 1.0;
        let (l1, l2) = (e1.n.ln(), e2.n.ln());
        let delta = l2 - l1;
        let t = u * delta;
        let ratio = if t == 0.0 { 1.0 } else { t.exp_m1() / t };
        let pole = (-u * l2).exp() * delta * ratio;
        let value = e1.regular.v - e2.regular.v + pole;
        let err = e1.truncation.v
            + e2.truncation.v
            + 4.0 * EPS * (e1.magnitude.v + e2.magnitude.v + pole.abs());
        (value, err, e1.work + e2.work)
    };
    let (value, err, work) = if s >= 0.0 {
        evaluate(default_cut(s), J_DEFAULT)
    } else {
        best_cut(s, |cut| evaluate(cut, J_MAX_NEGATIVE))
    };
    let scale = (-s * std::f64::consts::LN_2).exp();
    Ok(Approximation::new(scale * value, scale * err, work))
}
