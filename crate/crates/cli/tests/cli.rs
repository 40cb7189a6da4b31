//! End-to-end tests of the `agperf` binary: output formats, exit codes, and
//! the verify/fault-injection paths.

use std::process::{Command, Output};

fn agperf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agperf"))
        .args(args)
        .env_remove("AGPERF_INJECT_FAULT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn compute_emits_json_breakdown() {
    let out = agperf(&["compute", "--genus", "4", "--n", "7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["genus"], 4);
    assert_eq!(v["N"], 7);
    assert_eq!(v["G"], 10);
    assert_eq!(v["value"], "-1759/3360");
    assert_eq!(v["terms"]["I"], "1/672");
    assert_eq!(v["terms"]["II"], "-49/80");
    assert_eq!(v["terms"]["III"], "7/80");
    assert_eq!(v["formal"], false);
    assert_eq!(v["method"], "engine");
}

#[test]
fn compute_closed_branch_has_no_terms() {
    let out = agperf(&["compute", "--genus", "4", "--n", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["value"], "-1/7560");
    assert!(v["terms"].is_null());
    assert_eq!(v["method"], "closed-form");
}

#[test]
fn compute_vanishing_value() {
    let out = agperf(&["compute", "--genus", "3", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["value"], "0");
}

#[test]
fn compute_formal_row() {
    let out = agperf(&["compute", "--genus", "2", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["value"], "-11/12");
    assert_eq!(v["formal"], true);
}

#[test]
fn compute_out_of_range_exits_2() {
    let out = agperf(&["compute", "--genus", "3", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("error"), "stderr was: {err}");
}

#[test]
fn malformed_flags_exit_64() {
    assert_eq!(agperf(&["compute", "--genus", "four", "--n", "7"]).status.code(), Some(64));
    assert_eq!(agperf(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(agperf(&["table", "--g-min", "5", "--g-max", "3"]).status.code(), Some(64));
}

#[test]
fn help_exits_0() {
    assert_eq!(agperf(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_csv_rows() {
    let out = agperf(&["table", "--g-min", "2", "--g-max", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "genus,N,G,value,term_I,term_II,term_III,formal");
    // genus 2 covers N = 0..3
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("2,0,3,1/2880,"));
    assert!(lines[4].starts_with("2,3,3,-11/12,1/12,-3/2,1/2,true"));
}

#[test]
fn table_json_includes_engine_rows() {
    let out = agperf(&["table", "--g-min", "3", "--g-max", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = v.as_array().expect("array of rows");
    assert_eq!(rows.len(), 6); // N = 0..=5
    let last = &rows[5];
    assert_eq!(last["N"], 5);
    assert_eq!(last["value"], "-203/240");
}

#[test]
fn table_output_is_deterministic() {
    let a = agperf(&["table", "--g-min", "2", "--g-max", "5"]);
    let b = agperf(&["table", "--g-min", "2", "--g-max", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_matches_reference_table() {
    let out = agperf(&["verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6/6 rows match"));
}

#[test]
fn verify_json_reports_per_row() {
    let out = agperf(&["verify", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = v.as_array().expect("array");
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn verify_fault_injection_fails_loudly() {
    let out = Command::new(env!("CARGO_BIN_EXE_agperf"))
        .args(["verify"])
        .env("AGPERF_INJECT_FAULT", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("MISMATCH g=3 term III"), "output was: {text}");
    assert!(text.contains("5/6 rows match"), "output was: {text}");
}
