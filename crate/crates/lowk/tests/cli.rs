use std::process::{Command, Output};

use serde_json::Value;

fn lowk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lowk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lowk(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("valid json")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).expect("golden file")
}

#[test]
fn classify_matches_golden_files() {
    assert_eq!(stdout(&["classify", "--n", "4", "--format", "text"]), golden("classify_n4.txt"));
    assert_eq!(stdout(&["classify", "--n", "5", "--vc", "--format", "text"]), golden("classify_n5.txt"));
    assert_eq!(stdout(&["classify", "--n", "7", "--vc", "--format", "text"]), golden("classify_n7.txt"));
}

#[test]
fn b4_report_text_and_json() {
    assert_eq!(stdout(&["b4", "report", "--format", "text"]), golden("b4_report.txt"));
    let first = stdout(&["b4", "report"]);
    assert_eq!(first, stdout(&["b4", "report"]));
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["schema"], "lowk/1");
    assert_eq!(v["kminus1"]["value"]["rank"], 1);
    assert_eq!(v["kminus1"]["value"]["torsion"], serde_json::json!([2]));
    for field in ["wh", "k0", "kminus1"] {
        assert!(!v[field]["provenance"].as_array().unwrap().is_empty());
    }
}

#[test]
fn group_report_dic20() {
    let v = json(&["group", "dicyclic", "--m", "5"]);
    assert_eq!(v["group"], "Dic_20");
    assert_eq!(v["wh"]["value"]["rank"], 2);
    assert_eq!(v["k0"]["value"]["torsion"], serde_json::json!([2]));
    assert_eq!(v["kminus1"]["value"]["rank"], 1);
    assert_eq!(v["kminus1"]["value"]["torsion"], serde_json::json!([2]));
}

#[test]
fn group_report_unknown_k0() {
    let v = json(&["group", "dicyclic", "--m", "13", "--invariants", "k0"]);
    assert_eq!(v["k0"]["value"], "unknown");
    assert!(v.get("wh").is_none());
}

#[test]
fn group_rf_and_wedderburn() {
    let v = json(&["group", "tstar", "--invariants", "rf,wedderburn", "--field", "Fp:3"]);
    assert_eq!(v["rf"]["value"]["count"], 3);
    assert_eq!(v["wedderburn"]["value"].as_array().unwrap().len(), 5);
    let q = json(&["group", "quaternion", "--k", "5", "--invariants", "rf", "--field", "Qp:2"]);
    assert_eq!(q["rf"]["value"]["count"], 7);
}

#[test]
fn lambda_command() {
    assert_eq!(json(&["lambda", "--m", "127"])["lambda"], 9);
    assert_eq!(stdout(&["lambda", "--m", "257", "--format", "text"]), "lambda(257) = 16\n");
}

#[test]
fn verify_exit_codes() {
    let out = lowk(&["b4", "verify", "--suite", "rs"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify"][..],
        &["classify", "--n", "6", "--vc"],
        &["group", "dicyclic"],
        &["group", "tstar", "--m", "3"],
        &["group", "dicyclic", "--m", "9", "--invariants", "kminus1"],
        &["group", "cyclic", "--m", "6", "--invariants", "rf", "--field", "Fp:4"],
        &["lambda", "--m", "9"],
        &["b4", "verify", "--suite", "nope"],
    ] {
        assert_eq!(lowk(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn brute_force_bound_is_respected() {
    let out = lowk(&["--max-brute-force", "10", "group", "ostar", "--invariants", "rf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("48"));
}
