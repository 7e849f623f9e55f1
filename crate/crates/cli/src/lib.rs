//! The `summa` command line: argument grammar, dispatch and exit codes.

// `!(x > 0.0)` style tests are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod engine;
mod eval;
mod report;

use std::io::Write;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use summa_core::identity_catalog::{
    find_identity, manifest, verify_all_with, verify_record, RunOptions, Summary,
};
use summa_core::quadrature::{QuadConfig, DEFAULT_BUDGET};
use summa_core::summation_engines::{EngineConfig, DEFAULT_MAX_TERMS};
use summa_core::NumError;

pub use engine::{EngineKind, PRESETS};
pub use eval::{evaluate, EvalError, FUNCTIONS};
pub use report::{format_number, format_report, json_line, summary_line, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tolerance_override: Option<f64>,
    pub max_terms: usize,
    pub quad_budget: usize,
    pub format: Format,
    pub filter: Option<String>,
    pub parallel: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.max_terms < 16 {
            return Err(UsageError(format!(
                "--max-terms must be at least 16, got {}",
                self.max_terms
            )));
        }
        if self.quad_budget < 1000 {
            return Err(UsageError(format!(
                "--quad-budget must be at least 1000, got {}",
                self.quad_budget
            )));
        }
        if let Some(t) = self.tolerance_override {
            if !(t > 0.0) || !t.is_finite() {
                return Err(UsageError(format!(
                    "--tol must be positive and finite, got {t}"
                )));
            }
        }
        Ok(())
    }

    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig {
            quad: QuadConfig {
                budget: self.quad_budget,
            },
            max_terms: self.max_terms,
        }
    }
}

/// Bad arguments or configuration; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(
    name = "summa",
    version,
    about = "Special functions, summation engines and an identity verifier"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Tolerance override for verify and engine runs
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Term cap for accelerated series (at least 16)
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: usize,
    /// Evaluation budget per integral (at least 1000)
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    quad_budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Verify catalog entries on several threads
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a special function
    #[command(after_help = eval::help_text())]
    Eval {
        /// Function name (see the list below)
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Verify catalog identities
    Verify {
        /// Every entry (the default)
        #[arg(long, conflicts_with_all = ["id", "filter"])]
        all: bool,
        /// A single entry
        #[arg(long, conflicts_with = "filter")]
        id: Option<String>,
        /// Entries whose id starts with this prefix
        #[arg(long)]
        filter: Option<String>,
    },
    /// Print the catalog manifest
    List,
    /// Run a summation engine on a preset function
    #[command(after_help = engine::help_text())]
    Engine {
        #[arg(value_enum)]
        kind: EngineKind,
        #[arg(long)]
        preset: String,
    },
}

/// Parses `argv` (program name first), runs it and returns the exit code.
pub fn run(argv: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                EXIT_USAGE
            } else {
                EXIT_FAILED
            }
        }
    }
}

fn execute(cli: Cli, out: &mut impl Write) -> Result<i32> {
    let filter = match &cli.command {
        Command::Verify { filter, .. } => filter.clone(),
        _ => None,
    };
    let cfg = RunConfig {
        tolerance_override: cli.opts.tol,
        max_terms: cli.opts.max_terms,
        quad_budget: cli.opts.quad_budget,
        format: cli.opts.format,
        filter,
        parallel: cli.opts.parallel,
    };
    cfg.validate()?;
    match cli.command {
        Command::Eval { function, args } => run_eval(&function, &args, &cfg, out),
        Command::Verify { id, .. } => run_verify(id.as_deref(), &cfg, out),
        Command::List => run_list(&cfg, out),
        Command::Engine { kind, preset } => engine::run_engine(kind, &preset, &cfg, out),
    }
}

fn run_eval(function: &str, args: &[f64], cfg: &RunConfig, out: &mut impl Write) -> Result<i32> {
    let r = match evaluate(function, args) {
        Ok(r) => r,
        Err(EvalError::Usage(m)) => return Err(UsageError(m).into()),
        Err(EvalError::Numeric(e @ NumError::Domain(_))) => {
            return Err(UsageError(e.to_string()).into())
        }
        Err(EvalError::Numeric(e)) => return Err(e).context(format!("evaluating {function}")),
    };
    match cfg.format {
        Format::Text => writeln!(out, "{}", format_number(r.value))?,
        Format::Json => {
            let line = serde_json::json!({
                "function": function,
                "args": args,
                "value": report::json_number(r.value),
                "abs_err": report::json_number(r.abs_err),
            });
            writeln!(out, "{line}")?
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(id: Option<&str>, cfg: &RunConfig, out: &mut impl Write) -> Result<i32> {
    let opts = RunOptions {
        cfg: cfg.engine_config(),
        tol_override: cfg.tolerance_override,
    };
    let results = match id {
        Some(id) => {
            let rec = find_identity(id).map_err(|e| UsageError(e.to_string()))?;
            vec![verify_record(rec, &opts)]
        }
        None => verify_all_with(cfg.filter.as_deref(), cfg.parallel, &opts).0,
    };
    if results.is_empty() {
        let f = cfg.filter.as_deref().unwrap_or("");
        return Err(UsageError(format!("no catalog entry matches '{f}'")).into());
    }
    write!(out, "{}", format_report(&results, cfg.format))?;
    let summary = Summary::of(&results);
    Ok(if summary.failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn run_list(cfg: &RunConfig, out: &mut impl Write) -> Result<i32> {
    let m = manifest();
    match cfg.format {
        Format::Json => {
            for e in &m.entries {
                writeln!(out, "{}", serde_json::to_string(e)?)?;
            }
        }
        Format::Text => {
            let w = m.entries.iter().map(|e| e.id.len()).max().unwrap_or(2);
            for e in &m.entries {
                let status = format!("{:?}", e.status).to_lowercase();
                let tol = if e.tol.is_finite() {
                    format!("{:e}", e.tol)
                } else {
                    "-".into()
                };
                writeln!(
                    out,
                    "{:<w$}  {:<8}  {:<5}  {}",
                    e.id, status, tol, e.description
                )?;
            }
            writeln!(
                out,
                "{} entries: {} claimed, {} disputed",
                m.count, m.claimed, m.disputed
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("summa")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut o, &mut e);
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn config_bounds() {
        assert_eq!(call(&["--max-terms", "15", "list"]).0, EXIT_USAGE);
        assert_eq!(call(&["--quad-budget", "999", "list"]).0, EXIT_USAGE);
        assert_eq!(call(&["--tol", "-1", "list"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["--max-terms", "16", "--quad-budget", "1000", "list"]).0,
            EXIT_OK
        );
    }

    #[test]
    fn unknown_subcommand_prints_usage() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn eval_negative_arguments() {
        let (code, out, _) = call(&["eval", "hurwitz", "-1", "1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out.trim().parse::<f64>().unwrap(),
            format_number(-1.0 / 12.0).parse::<f64>().unwrap()
        );
    }

    #[test]
    fn eval_domain_error_is_usage() {
        let (code, _, err) = call(&["eval", "loggamma", "-1"]);
        assert_eq!(code, EXIT_USAGE, "{err}");
    }
}
