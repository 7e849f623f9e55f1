//! Scalar special functions: trigonometric integrals, the gamma family,
//! Hurwitz zeta and its s-derivatives, Stieltjes constants, Barnes G and
//! Bernoulli polynomials.

mod barnes;
mod bernoulli;
mod gamma;
mod stieltjes;
mod trig_integrals;
mod zeta;

pub use barnes::log_barnes_g;
pub use bernoulli::{
    bernoulli_exact, bernoulli_number, bernoulli_poly, bernoulli_poly_periodic, BERNOULLI_MAX,
};
pub use gamma::{digamma, log_gamma, polygamma};
pub(crate) use stieltjes::log_power_derivative;
pub use stieltjes::stieltjes_gamma;
pub use trig_integrals::{cosine_integral, shifted_sine_integral, sine_integral};
pub use zeta::{alternating_hurwitz, hurwitz_zeta, hurwitz_zeta_deriv};

use crate::error::Result;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A computed value with an absolute error estimate and a work counter.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Approximation {
    pub value: f64,
    pub abs_err: f64,
    pub work: usize,
}

impl Approximation {
    pub fn new(value: f64, abs_err: f64, work: usize) -> Self {
        Approximation {
            value,
            abs_err: abs_err.abs(),
            work,
        }
    }

    /// A value known exactly (up to rounding of the final operation).
    pub fn exact(value: f64) -> Self {
        Approximation::new(value, f64::EPSILON * value.abs(), 1)
    }
}

/// Unwraps a fallible scalar result to its value, mapping errors to NaN.
///
/// Handy inside integrands and series terms, where the quadrature and
/// acceleration layers reject non-finite samples themselves.
pub trait ValueOrNan {
    fn val(self) -> f64;
}

impl ValueOrNan for Result<Approximation> {
    fn val(self) -> f64 {
        match self {
            Ok(a) => a.value,
            Err(_) => f64::NAN,
        }
    }
}

/// Catalan's constant, from ψ′(¼) = π² + 8G.
pub fn catalan() -> Approximation {
    let t = polygamma(1, 0.25).expect("ψ′(¼) is in domain");
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    Approximation::new((t.value - pi2) / 8.0, t.abs_err / 8.0 + 4e-16, t.work)
}
