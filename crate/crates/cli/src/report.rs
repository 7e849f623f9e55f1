//! Text and line-delimited JSON rendering of verification results.

use serde::Serialize;
use summa_core::identity_catalog::{IdentityStatus, Summary, VerificationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `v` rounded to 15 significant digits.
pub fn round15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

/// 15 significant digits, printed in the shortest form that re-parses to
/// the rounded value.
pub fn format_number(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round15(v);
    let a = r.abs();
    if r == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// JSON number, or null when not finite.
pub fn json_number(v: f64) -> Option<f64> {
    v.is_finite().then(|| round15(v))
}

#[derive(Serialize)]
struct JsonResult<'a> {
    id: &'a str,
    lhs: Option<f64>,
    rhs: Option<f64>,
    abs_diff: Option<f64>,
    rel_diff: Option<f64>,
    passed: Option<bool>,
    status: IdentityStatus,
    elapsed_ms: Option<f64>,
    notes: &'a str,
}

pub fn json_line(r: &VerificationResult) -> String {
    let j = JsonResult {
        id: &r.id,
        lhs: json_number(r.lhs_value),
        rhs: json_number(r.rhs_value),
        abs_diff: json_number(r.abs_diff),
        rel_diff: json_number(r.rel_diff),
        passed: r.passed,
        status: r.status,
        elapsed_ms: json_number((r.elapsed_ms * 1e3).round() / 1e3),
        notes: &r.notes,
    };
    serde_json::to_string(&j).expect("plain struct serializes")
}

pub fn summary_line(s: &Summary) -> String {
    format!(
        "passed {} / failed {} / disputed {}",
        s.passed, s.failed, s.disputed
    )
}

fn verdict(r: &VerificationResult) -> &'static str {
    match r.passed {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "DISPUTED",
    }
}

/// Renders results; text ends with the summary line, JSON has one object
/// per line.
pub fn format_report(results: &[VerificationResult], format: Format) -> String {
    match format {
        Format::Json => results.iter().map(|r| json_line(r) + "\n").collect(),
        Format::Text => {
            let header = [
                "id", "status", "lhs", "rhs", "abs_diff", "tol", "result", "ms",
            ];
            let rows: Vec<[String; 8]> = results
                .iter()
                .map(|r| {
                    let status = match r.status {
                        IdentityStatus::Claimed => "claimed",
                        IdentityStatus::Disputed => "disputed",
                    };
                    [
                        r.id.clone(),
                        status.to_string(),
                        format_number(r.lhs_value),
                        format_number(r.rhs_value),
                        format_number(r.abs_diff),
                        if r.tol.is_finite() {
                            format!("{:e}", r.tol)
                        } else {
                            "-".into()
                        },
                        verdict(r).to_string(),
                        format!("{:.1}", r.elapsed_ms),
                    ]
                })
                .collect();
            let mut width = header.map(str::len);
            for row in &rows {
                for (w, cell) in width.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&width)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = String::new();
            if !rows.is_empty() {
                out += &line(&header.map(String::from));
                for (row, r) in rows.iter().zip(results) {
                    out += &line(row);
                    if !r.notes.is_empty() {
                        out += &format!("    note: {}\n", r.notes);
                    }
                }
            }
            out + &summary_line(&Summary::of(results)) + "\n"
        }
    }
}
