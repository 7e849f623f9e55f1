//! `engine` presets: fixed test functions for the Poisson and Abel–Plana
//! engines.

use std::io::Write;

use anyhow::Result;
use num_complex::Complex64;
use summa_core::summation_engines::{
    abel_plana_alternating_with, abel_plana_halfinteger_with, abel_plana_with,
    poisson_alternating_with, poisson_finite_with, poisson_semiinf_with, Analytic, EngineReport,
};

use crate::report::{format_number, json_number};
use crate::{Format, RunConfig, UsageError, EXIT_FAILED, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EngineKind {
    Poisson,
    AbelPlana,
}

/// (engine, preset, what it sums)
pub const PRESETS: [(EngineKind, &str, &str); 10] = [
    (EngineKind::Poisson, "exp", "f(x) = e^{-x} on [0, inf)"),
    (
        EngineKind::Poisson,
        "exp-2.5",
        "f(x) = e^{-2.5x} on [0, inf)",
    ),
    (
        EngineKind::Poisson,
        "gaussian",
        "f(x) = e^{-x^2} on [0, inf)",
    ),
    (
        EngineKind::Poisson,
        "alternating-exp",
        "alternating, f(x) = e^{-x}",
    ),
    (
        EngineKind::Poisson,
        "finite-exp",
        "f(x) = e^x on [0.3, 2.6]",
    ),
    (EngineKind::AbelPlana, "exp", "f(z) = e^{-z}"),
    (EngineKind::AbelPlana, "exp-2.5", "f(z) = e^{-2.5z}"),
    (EngineKind::AbelPlana, "inverse-square", "f(z) = 1/(1+z)^2"),
    (
        EngineKind::AbelPlana,
        "alternating-exp",
        "alternating, f(z) = e^{-z}",
    ),
    (
        EngineKind::AbelPlana,
        "halfinteger-exp",
        "half-integer lattice, f(z) = e^{-z}",
    ),
];

/// Fourier modes computed explicitly before the tail is extrapolated.
const PRESET_MODES: usize = 256;
const DEFAULT_TOL: f64 = 1e-10;

pub fn help_text() -> String {
    let mut s = String::from("presets:\n");
    for (kind, name, what) in PRESETS {
        let k = match kind {
            EngineKind::Poisson => "poisson",
            EngineKind::AbelPlana => "abel-plana",
        };
        s += &format!("  {k:<11} {name:<16} {what}\n");
    }
    s
}

pub fn evaluate_preset(kind: EngineKind, preset: &str, cfg: &RunConfig) -> Result<EngineReport> {
    let tol = cfg.tolerance_override.unwrap_or(DEFAULT_TOL);
    let ec = cfg.engine_config();
    let m = PRESET_MODES;
    let r = match (kind, preset) {
        (EngineKind::Poisson, "exp") => poisson_semiinf_with(|x: f64| (-x).exp(), m, tol, &ec),
        (EngineKind::Poisson, "exp-2.5") => {
            poisson_semiinf_with(|x: f64| (-2.5 * x).exp(), m, tol, &ec)
        }
        (EngineKind::Poisson, "gaussian") => {
            poisson_semiinf_with(|x: f64| (-x * x).exp(), m, tol, &ec)
        }
        (EngineKind::Poisson, "alternating-exp") => {
            poisson_alternating_with(|x: f64| (-x).exp(), m, tol, &ec)
        }
        (EngineKind::Poisson, "finite-exp") => poisson_finite_with(f64::exp, 0.3, 2.6, m, tol, &ec),
        (EngineKind::AbelPlana, "exp") => {
            abel_plana_with(&Analytic(|z: Complex64| (-z).exp()), tol, &ec)
        }
        (EngineKind::AbelPlana, "exp-2.5") => {
            abel_plana_with(&Analytic(|z: Complex64| (-2.5 * z).exp()), tol, &ec)
        }
        (EngineKind::AbelPlana, "inverse-square") => abel_plana_with(
            &Analytic(|z: Complex64| 1.0 / ((1.0 + z) * (1.0 + z))),
            tol,
            &ec,
        ),
        (EngineKind::AbelPlana, "alternating-exp") => {
            abel_plana_alternating_with(&Analytic(|z: Complex64| (-z).exp()), tol, &ec)
        }
        (EngineKind::AbelPlana, "halfinteger-exp") => {
            abel_plana_halfinteger_with(&Analytic(|z: Complex64| (-z).exp()), tol, &ec)
        }
        _ => {
            return Err(UsageError(format!(
                "unknown preset '{preset}' for this engine\n{}",
                help_text()
            ))
            .into())
        }
    };
    Ok(r?)
}

pub fn run_engine(
    kind: EngineKind,
    preset: &str,
    cfg: &RunConfig,
    out: &mut impl Write,
) -> Result<i32> {
    let r = evaluate_preset(kind, preset, cfg)?;
    match cfg.format {
        Format::Text => {
            writeln!(out, "lhs        {}", format_number(r.lhs.value))?;
            writeln!(out, "rhs        {}", format_number(r.rhs.value))?;
            writeln!(out, "residual   {}", format_number(r.residual))?;
            writeln!(out, "modes      {}", r.n_modes)?;
            writeln!(out, "converged  {}", r.converged)?;
        }
        Format::Json => {
            let line = serde_json::json!({
                "preset": preset,
                "lhs": json_number(r.lhs.value),
                "rhs": json_number(r.rhs.value),
                "residual": json_number(r.residual),
                "n_modes": r.n_modes,
                "converged": r.converged,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(if r.converged { EXIT_OK } else { EXIT_FAILED })
}
