//! Registry of verifiable identities. Each entry evaluates its two sides
//! by independent routes and compares them at a registered tolerance;
//! disputed entries report the measured discrepancy without a verdict.

mod cot_integrals;
mod digamma_series;
mod helpers;
mod hurwitz;
mod summation;
mod trig_series;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{NumError, Result};
use crate::summation_engines::EngineConfig;

/// Whether an entry is expected to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityStatus {
    Claimed,
    Disputed,
}

/// Evaluation context handed to recipes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ctx {
    pub cfg: EngineConfig,
    /// Working tolerance for the numerical pieces of a recipe.
    pub tol: f64,
}

/// One side of an identity, evaluated at every sample of the entry.
pub type Recipe = Box<dyn Fn(&Ctx) -> Result<Vec<f64>> + Send + Sync>;
/// Extra notes computed from the context and both sides' samples.
pub type Annotator = Box<dyn Fn(&Ctx, &[f64], &[f64]) -> String + Send + Sync>;

/// A registered identity.
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub lhs: Recipe,
    pub rhs: Recipe,
    pub tol: f64,
    pub status: IdentityStatus,
    /// Classical attribution, if any.
    pub reference: String,
    /// Labels of the samples both recipes evaluate, in order.
    pub samples: Vec<String>,
    /// Why the tolerance is what it is, and any correction applied.
    pub rationale: String,
    pub annotate: Option<Annotator>,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("tol", &self.tol)
            .field("status", &self.status)
            .field("samples", &self.samples)
            .finish_non_exhaustive()
    }
}

/// Serializable view of a record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentitySummary {
    pub id: String,
    pub description: String,
    pub tol: f64,
    pub status: IdentityStatus,
    pub reference: String,
    pub samples: Vec<String>,
    pub rationale: String,
}

impl IdentityRecord {
    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            id: self.id.clone(),
            description: self.description.clone(),
            tol: self.tol,
            status: self.status,
            reference: self.reference.clone(),
            samples: self.samples.clone(),
            rationale: self.rationale.clone(),
        }
    }
}

/// Outcome of checking one entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub id: String,
    pub status: IdentityStatus,
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tol: f64,
    /// None for disputed entries.
    pub passed: Option<bool>,
    pub elapsed_ms: f64,
    pub notes: String,
}

/// Counts over a batch of results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub disputed: usize,
}

impl Summary {
    pub fn of(results: &[VerificationResult]) -> Self {
        results.iter().fold(Summary::default(), |mut s, r| {
            match r.passed {
                Some(true) => s.passed += 1,
                Some(false) => s.failed += 1,
                None => s.disputed += 1,
            }
            s
        })
    }
}

/// Options for a batch run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunOptions {
    pub cfg: EngineConfig,
    pub tol_override: Option<f64>,
}

/// Working tolerances are this much tighter than the entry tolerance.
const WORK_FACTOR: f64 = 1.0 / 50.0;
const WORK_FLOOR: f64 = 1e-14;

fn registry() -> &'static [IdentityRecord] {
    static REGISTRY: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(trig_series::entries());
        all.extend(digamma_series::entries());
        all.extend(summation::entries());
        all.extend(hurwitz::entries());
        all.extend(cot_integrals::entries());
        all.sort_by(|a, b| a.id.cmp(&b.id));
        all
    })
}

/// All registered entries in id order.
pub fn list_identities() -> Vec<IdentitySummary> {
    registry().iter().map(IdentityRecord::summary).collect()
}

/// Looks up a registered entry.
pub fn find_identity(id: &str) -> Result<&'static IdentityRecord> {
    registry()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| NumError::NotFound(format!("no identity with id {id}")))
}

/// Checks one registered entry with default budgets.
pub fn verify_identity(id: &str, tol_override: Option<f64>) -> Result<VerificationResult> {
    let opts = RunOptions {
        tol_override,
        ..RunOptions::default()
    };
    Ok(verify_record(find_identity(id)?, &opts))
}

/// Checks one record. Evaluation failures are reported in the result.
pub fn verify_record(rec: &IdentityRecord, opts: &RunOptions) -> VerificationResult {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(rec.tol);
    let ctx = Ctx {
        cfg: opts.cfg,
        tol: (tol.min(rec.tol) * WORK_FACTOR).max(WORK_FLOOR),
    };
    let sides = (rec.lhs)(&ctx).and_then(|l| Ok((l, (rec.rhs)(&ctx)?)));
    let mut result = VerificationResult {
        id: rec.id.clone(),
        status: rec.status,
        lhs_value: f64::NAN,
        rhs_value: f64::NAN,
        abs_diff: f64::NAN,
        rel_diff: f64::NAN,
        tol,
        passed: None,
        elapsed_ms: 0.0,
        notes: String::new(),
    };
    let mut notes: Vec<String> = Vec::new();
    match sides {
        Err(e) => {
            notes.push(format!("evaluation failed: {e}"));
            if rec.status == IdentityStatus::Claimed {
                result.passed = Some(false);
            }
        }
        Ok((l, r)) if l.len() != r.len() || l.is_empty() => {
            notes.push(format!("sample count mismatch: {} vs {}", l.len(), r.len()));
            if rec.status == IdentityStatus::Claimed {
                result.passed = Some(false);
            }
        }
        Ok((l, r)) => {
            // report the sample with the largest difference; NaN counts as worst
            let diff = |i: usize| {
                let d = (l[i] - r[i]).abs();
                if d.is_nan() {
                    f64::INFINITY
                } else {
                    d
                }
            };
            let worst = (0..l.len())
                .max_by(|&i, &j| diff(i).total_cmp(&diff(j)))
                .expect("non-empty");
            result.lhs_value = l[worst];
            result.rhs_value = r[worst];
            result.abs_diff = (l[worst] - r[worst]).abs();
            let scale = l[worst].abs().max(r[worst].abs());
            result.rel_diff = if scale == 0.0 {
                0.0
            } else {
                result.abs_diff / scale
            };
            if l.len() > 1 {
                let label = rec.samples.get(worst).map(String::as_str).unwrap_or("?");
                notes.push(format!("worst of {} samples at {label}", l.len()));
            }
            if rec.status == IdentityStatus::Claimed {
                result.passed = Some(result.abs_diff <= tol);
            }
            if let Some(annotate) = &rec.annotate {
                notes.push(annotate(&ctx, &l, &r));
            }
        }
    }
    result.notes = notes.join("; ");
    result.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    result
}

/// Checks every entry whose id starts with `filter`, in id order.
pub fn verify_all(filter: Option<&str>, parallel: bool) -> (Vec<VerificationResult>, Summary) {
    verify_all_with(filter, parallel, &RunOptions::default())
}

pub fn verify_all_with(
    filter: Option<&str>,
    parallel: bool,
    opts: &RunOptions,
) -> (Vec<VerificationResult>, Summary) {
    let selected: Vec<&IdentityRecord> = registry()
        .iter()
        .filter(|r| filter.is_none_or(|p| r.id.starts_with(p)))
        .collect();
    let results: Vec<VerificationResult> = if parallel {
        selected
            .par_iter()
            .map(|r| verify_record(r, opts))
            .collect()
    } else {
        selected.iter().map(|r| verify_record(r, opts)).collect()
    };
    let summary = Summary::of(&results);
    (results, summary)
}

/// Human-readable manifest of the registry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Manifest {
    pub count: usize,
    pub claimed: usize,
    pub disputed: usize,
    pub entries: Vec<IdentitySummary>,
}

pub fn manifest() -> Manifest {
    let entries = list_identities();
    let disputed = entries
        .iter()
        .filter(|e| e.status == IdentityStatus::Disputed)
        .count();
    Manifest {
        count: entries.len(),
        claimed: entries.len() - disputed,
        disputed,
        entries,
    }
}
