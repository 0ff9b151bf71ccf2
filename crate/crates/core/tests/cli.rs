use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl3-serre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_reports_region_and_socle_weight() {
    let v = json(&["classify", "--p", "5", "--weight", "9,4,0"]);
    assert_eq!(v["region"], "C(p)");
    assert_eq!(v["lambda_prime"], "8,4,1");
    let v = json(&["classify", "--p", "7", "--weight", "30,0,0"]);
    assert_eq!(v["region"], "other-dominant");
    assert!(v.get("lambda_prime").is_none());
}

#[test]
fn char_kinds() {
    let weyl = json(&["char", "--p", "5", "--kind", "weyl", "--weight", "4,2,0"]);
    let simple = json(&["char", "--p", "5", "--kind", "simple", "--weight", "4,2,0"]);
    let tilting = json(&["char", "--p", "5", "--kind", "tilting", "--weight", "4,2,0"]);
    assert_eq!(weyl["dim"], 27);
    assert_eq!(simple["dim"], 19);
    assert_eq!(tilting["dim"], 35);
    assert_eq!(simple["weyl_decomposition"].as_array().unwrap().len(), 2);
}

#[test]
fn tensor_and_socle() {
    let v = json(&["tensor", "--p", "5", "--weight", "2,1,0"]);
    assert_eq!(v["dim"], 64);
    assert_eq!(v["summands"][0]["kind"], "T");
    assert_eq!(v["summands"][0]["weight"], "3,1,-1");
    let v = json(&["socle", "--p", "7", "--lambda", "5,2,0"]);
    assert_eq!(
        v["constituents"],
        serde_json::json!(["4,2,1", "4,3,0", "5,1,1", "5,2,0"])
    );
    assert_eq!(v["exact"], true);
}

#[test]
fn pair_and_ext() {
    let v = json(&["pair", "--p", "5", "--lambda", "2,1,0", "--lambda-prime", "3,0,0"]);
    assert_eq!(v["good"], true);
    assert_eq!(v["matched_shape"]["alpha"], "a12");
    let v = json(&[
        "ext",
        "--p",
        "5",
        "--f",
        "2",
        "--lambda",
        "2,1,0;2,1,0",
        "--lambda-prime",
        "2,1,0;3,0,0",
    ]);
    assert_eq!(v["status"], "EqualByTheorem");
    assert_eq!(v["h1_dim"], 16);
    let v = json(&[
        "ext",
        "--p",
        "5",
        "--lambda",
        "2,1,0",
        "--lambda-prime",
        "1,1,-1",
        "--literal",
    ]);
    assert_eq!(v["match_mode"], "literal");
}

#[test]
fn scan_writes_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = run(&["scan", "--p", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("lambda,lambda_prime,status,bad_forward,bad_backward,good_match,gated")
    );
    let report = json(&["scan", "--p", "5"]);
    assert_eq!(lines.count() as u64, report["pairs"].as_u64().unwrap());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["classify", "--weight", "1,0,0"]), 1);
    assert_eq!(code(&["classify", "--p", "6", "--weight", "1,0,0"]), 1);
    assert_eq!(code(&["classify", "--p", "5", "--weight", "1,x,0"]), 1);
    assert_eq!(
        code(&[
            "pair",
            "--p",
            "5",
            "--f",
            "2",
            "--lambda",
            "2,1,0",
            "--lambda-prime",
            "2,1,0"
        ]),
        1
    );
    assert_eq!(code(&["tensor", "--p", "5", "--weight", "5,0,0"]), 2);
    assert_eq!(
        code(&["char", "--p", "5", "--kind", "tilting", "--weight", "30,0,0"]),
        2
    );
    let out = run(&["tensor", "--p", "5", "--weight", "5,0,0"]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
