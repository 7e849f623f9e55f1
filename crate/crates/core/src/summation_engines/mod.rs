//! Summation formulas as numerical contracts: each engine evaluates both
//! sides independently and reports the residual.

mod abel_plana;
mod limit;
mod poisson;

pub use abel_plana::{
    abel_plana, abel_plana_alternating, abel_plana_alternating_with, abel_plana_halfinteger,
    abel_plana_halfinteger_with, abel_plana_with, check_real_restriction, Analytic,
    AnalyticWithReal, ComplexCapableFn,
};
pub use limit::{regularized_limit, LimitLadder, LimitModel};
pub use poisson::{
    poisson_alternating, poisson_alternating_with, poisson_finite, poisson_finite_with,
    poisson_semiinf, poisson_semiinf_with,
};

use crate::quadrature::{QuadConfig, DEFAULT_BUDGET};
use crate::special_functions::Approximation;

/// Default cap on terms for the lattice-sum side.
pub const DEFAULT_MAX_TERMS: usize = 8192;

/// Both sides of a summation formula and how well they agree.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EngineReport {
    pub lhs: Approximation,
    pub rhs: Approximation,
    pub residual: f64,
    pub n_modes: usize,
    pub converged: bool,
}

/// Budgets shared by the engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub quad: QuadConfig,
    pub max_terms: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            quad: QuadConfig {
                budget: DEFAULT_BUDGET,
            },
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

fn report(lhs: Approximation, rhs: Approximation, n_modes: usize, tol: f64) -> EngineReport {
    let residual = (lhs.value - rhs.value).abs();
    EngineReport {
        lhs,
        rhs,
        residual,
        n_modes,
        converged: residual <= lhs.abs_err + rhs.abs_err + tol,
    }
}
