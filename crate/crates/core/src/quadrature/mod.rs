//! Finite, semi-infinite and oscillatory quadrature plus series acceleration.

mod accel;
mod finite;
mod oscillatory;
mod rules;
mod semiinf;

pub use accel::{accelerate_series, accelerate_series_with, sum_unimodular, AccelMode};
pub use finite::{integrate_finite, integrate_finite_with};
pub use oscillatory::{
    integrate_oscillatory_semiinf, integrate_oscillatory_semiinf_with, KernelKind,
    OscillatoryKernel,
};
pub use semiinf::{integrate_semiinf_decay, integrate_semiinf_decay_with};

/// Default integrand-evaluation budget per integral.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    /// Integrand evaluations.
    pub evals: usize,
    /// Panels consumed (oscillatory integrals: half-period panels).
    pub segments: usize,
}

/// Which endpoints of a finite interval carry an integrable singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SingularEndpoints {
    pub left: bool,
    pub right: bool,
}

impl SingularEndpoints {
    pub const NONE: Self = SingularEndpoints {
        left: false,
        right: false,
    };
    pub const LEFT: Self = SingularEndpoints {
        left: true,
        right: false,
    };
    pub const RIGHT: Self = SingularEndpoints {
        left: false,
        right: true,
    };
    pub const BOTH: Self = SingularEndpoints {
        left: true,
        right: true,
    };
}

/// Evaluation budget shared by the integrators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadConfig {
    pub budget: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}
