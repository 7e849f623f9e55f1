use std::process::{Command, Output};

fn summa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_summa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// JSON lines with the wall-clock field removed.
fn without_timing(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            assert!(v["elapsed_ms"].is_number(), "{l}");
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        })
        .collect()
}

#[test]
#[allow(clippy::approx_constant)]
fn eval_ci_at_pi() {
    let o = summa(&["eval", "Ci", "3.14159265"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.0736679131890922).abs() < 1e-14, "{v}");
}

#[test]
fn eval_json_carries_value_and_error() {
    let o = summa(&["eval", "hurwitz", "2", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let z = v["value"].as_f64().unwrap();
    assert!((z - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    assert!(v["abs_err"].as_f64().unwrap() >= 0.0);
}

#[test]
fn list_prints_manifest() {
    let o = summa(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("I-3.1.8") && text.contains("disputed"),
        "{text}"
    );
    let json = stdout(&summa(&["list", "--format", "json"]));
    let ids: Vec<String> = json
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["id"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert!(ids.len() >= 39, "{ids:?}");
}

#[test]
fn verify_filter_slice() {
    let o = summa(&["verify", "--filter", "I-3.2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = without_timing(&stdout(&o));
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["I-3.2.2", "I-3.2.3", "I-3.2.4"]);
    assert!(rows
        .iter()
        .all(|r| r["passed"] == serde_json::Value::Bool(true)));
}

#[test]
fn text_report_ends_with_summary() {
    let o = summa(&["verify", "--filter", "I-3.6"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(
        text.trim_end()
            .ends_with("passed 3 / failed 0 / disputed 1"),
        "{text}"
    );
}

#[test]
fn disputed_entries_do_not_change_exit_code() {
    for id in ["I-3.7.15", "I-3.6.13v14"] {
        let o = summa(&["verify", "--id", id, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert!(v["passed"].is_null());
        assert!(v["abs_diff"].as_f64().unwrap().is_finite());
        assert!(!v["notes"].as_str().unwrap().is_empty());
    }
}

#[test]
fn failing_check_exits_one() {
    // below double-precision resolution
    let o = summa(&["verify", "--id", "I-3.1.7", "--tol", "1e-20"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["verify", "--bogus"],
        vec!["eval", "nosuch", "1"],
        vec!["eval", "psi"],
        vec!["verify", "--id", "I-0.0.0"],
        vec!["--max-terms", "8", "list"],
        vec!["--quad-budget", "10", "list"],
        vec!["engine", "poisson", "--preset", "nosuch"],
        vec!["verify", "--all", "--id", "I-3.1.8"],
    ] {
        let o = summa(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn engine_presets() {
    let o = summa(&["engine", "poisson", "--preset", "exp", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["converged"], serde_json::Value::Bool(true));
    assert!(v["residual"].as_f64().unwrap() <= 1e-9);
    let o = summa(&["engine", "abel-plana", "--preset", "inverse-square"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("converged  true"));
}

#[test]
fn json_output_matches_golden_file() {
    let o = summa(&["verify", "--filter", "I-4", "--format", "json"]);
    let got = without_timing(&stdout(&o));
    let golden = include_str!("golden/verify_I-4.jsonl");
    let want: Vec<serde_json::Value> = golden
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(got, want);
}

#[test]
fn identical_argv_gives_identical_json() {
    let args = ["verify", "--all", "--parallel", "--format", "json"];
    let a = without_timing(&stdout(&summa(&args)));
    let b = without_timing(&stdout(&summa(&args)));
    let serial = without_timing(&stdout(&summa(&["verify", "--all", "--format", "json"])));
    assert_eq!(a, b);
    assert_eq!(a, serial);
}
