//! Exit-code and interface contract tests for the lrctool binary.

use std::process::{Command, Output};

fn lrctool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrctool"))
        .args(args)
        .output()
        .expect("lrctool runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn usage_errors_exit_2() {
    // parameter outside the family's domain
    let out = lrctool(&["verify", "--family", "cms2", "--m", "3", "--s", "3"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
    // unknown family
    let out = lrctool(&["construct", "--family", "hamming", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown family"));
    // missing required parameter
    let out = lrctool(&["construct", "--family", "cms2", "--m", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("requires --s"));
    // extraneous parameter
    let out = lrctool(&["construct", "--family", "simplex", "--m", "4", "--s", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("does not take --s"));
    // malformed flag handled by the argument parser
    let out = lrctool(&["construct", "--family", "simplex", "--m", "four"]);
    assert_eq!(out.status.code(), Some(2));
    // enumeration guard refuses oversized verification
    let out = lrctool(&["verify", "--family", "simplex", "--m", "12", "--guard", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verified_instances_exit_0() {
    let out = lrctool(&["verify", "--family", "subspace", "--s", "5"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("result: all claims verified"));
    assert!(text.contains("[24, 5, 12] locality 2"));
}

#[test]
fn falsified_claims_exit_3() {
    // the construction degenerates when t equals m: the only parity
    // check has weight m+1, so no locality-2 certificate exists
    let out = lrctool(&["verify", "--family", "cmt", "--m", "5", "--t", "5"]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("locality-search: FALSIFIED"));
    assert!(text.contains("result: at least one claim was falsified"));
}

#[test]
fn construct_then_verify_from_file_roundtrip() {
    let dir = std::env::temp_dir().join("lrctool-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cms2-5-3.code");
    let path = path.to_str().unwrap();

    let out = lrctool(&["construct", "--family", "cms2", "--m", "5", "--s", "3", "--out", path]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let out = lrctool(&[
        "verify", "--family", "cms2", "--m", "5", "--s", "3", "--from-file", path,
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("check file-match: ok"));

    // the same file against different parameters is a falsified claim
    let out = lrctool(&[
        "verify", "--family", "cms2", "--m", "5", "--s", "4", "--from-file", path,
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("check file-match: FALSIFIED"));

    // a corrupted file is a usage error, not a falsification
    std::fs::write(path, "family=cms2 n=28 k=5\ngarbage\n").unwrap();
    let out = lrctool(&[
        "verify", "--family", "cms2", "--m", "5", "--s", "3", "--from-file", path,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_json_is_well_formed() {
    let out = lrctool(&["construct", "--family", "cms2", "--m", "4", "--s", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "cms2");
    assert_eq!(v["n"], 12);
    assert_eq!(v["k"], 4);
    let gen = v["generator"].as_array().unwrap();
    assert_eq!(gen.len(), 4);
    assert_eq!(gen[0], "100011111101");
    assert_eq!(v["parity_check"].as_array().unwrap().len(), 8);
    // 0-based coordinate labels, one per column
    assert_eq!(v["column_labels"].as_array().unwrap().len(), 12);
}

#[test]
fn bounds_reports_the_inverse_length_method() {
    let out = lrctool(&[
        "bounds", "--n", "38", "--k", "6", "--d", "18", "--r", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cm_k_max"], 6);
    assert_eq!(v["cm_t"], 1);
    assert_eq!(v["cm_attained"], true);
    assert_eq!(v["kopt_method"], "griesmer-inverse");
    assert_eq!(v["griesmer_attained"], true);

    // omitted distance defaults to the largest Griesmer-feasible one
    let out = lrctool(&["bounds", "--n", "12", "--k", "4", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("d=6"));

    let out = lrctool(&["bounds", "--n", "3", "--k", "6", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repair_demo_runs_deterministically() {
    let a = lrctool(&["repair-demo", "--family", "augsimplex", "--m", "6"]);
    assert_eq!(a.status.code(), Some(0), "stderr: {}", stderr(&a));
    let b = lrctool(&["repair-demo", "--family", "augsimplex", "--m", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("every coordinate repaired from its group: yes"));
    assert!(text.contains("0 failures"));
}
