//! Exit-code and output-format contract of the command-line front end.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qcrank"))
}

#[test]
fn passing_check_exits_zero() {
    let out = bin().args(["verify", "--id", "eq11", "--order", "30"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("eq11"));
    assert!(stdout.contains("PASS"));
}

#[test]
fn informational_failure_does_not_change_exit_code() {
    let out = bin()
        .args(["verify", "--id", "conj51_reading_display", "--order", "30"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("INFO fail"));
}

#[test]
fn unknown_suite_exits_two() {
    let out = bin().args(["verify", "--suite", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown suite"));
}

#[test]
fn unknown_id_exits_two() {
    let out = bin().args(["verify", "--id", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_cap_enforced_and_overridable() {
    let out = bin().args(["verify", "--id", "eq11", "--order", "500"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "--id", "eq11", "--order", "201", "--unlimited-order"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn order_below_one_exits_two() {
    let out = bin().args(["verify", "--id", "eq11", "--order", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_round_trips() {
    let out = bin()
        .args(["verify", "--id", "eq11", "--id", "eq12", "--order", "30", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = reports.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    for r in arr {
        assert_eq!(r["passed"], serde_json::Value::Bool(true));
        assert!(r["id"].is_string());
        assert!(r["effective_order"].is_i64());
        assert!(r["runtime_ms"].is_number());
    }
}

#[test]
fn json_mismatch_coefficients_are_strings() {
    let out = bin()
        .args(["verify", "--id", "conj51_reading_display", "--order", "30", "--format", "json"])
        .output()
        .unwrap();
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mismatch = &reports.as_array().unwrap()[0]["first_mismatch"];
    assert!(mismatch["lhs"].is_string());
    assert!(mismatch["rhs"].is_string());
    assert!(mismatch["exponent"].is_i64());
}

#[test]
fn catalogue_lists_every_id_and_annotates_open_ones() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("eq14 [unproven]"));
    assert!(stdout.contains("eq30 [unproven]"));
    assert!(stdout.contains("conj41"));
    for id in ["eq10", "thm31", "lem53", "appell_xfer_7", "cor33"] {
        assert!(stdout.contains(id), "catalogue missing {id}");
    }
}

#[test]
fn partition_stats_table() {
    let out = bin()
        .args(["partitions", "stats", "--n", "4", "--k", "5", "--stat", "crank"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    for line in ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"] {
        assert!(stdout.contains(line));
    }
    assert!(stdout.contains("class 0: 1"));
    assert!(stdout.contains("class 1: 4"));
}

#[test]
fn suite_filter_runs_only_tagged_checks() {
    let out = bin()
        .args(["verify", "--suite", "base", "--list"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("ramanujan_5"));
    assert!(!stdout.contains("eq10"));
}
