use std::io::Write;
use std::process::{Command, Output};

use cubic_core::exactnum::{imag_unit, CycNum};
use cubic_core::models;
use cubic_verify::input::{check_input, parse_input_str};
use cubic_verify::scenarios::registry;
use serde_json::Value;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().unwrap()
}

fn temp_doc(name: &str, body: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("verify-cli-{}-{name}.json", std::process::id()));
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    p
}

#[test]
fn all_is_deterministic_and_complete() {
    let a = verify(&["--format", "json"]);
    let b = verify(&["--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let ids: Vec<&str> = v["scenarios"].as_array().unwrap().iter().map(|s| s["id"].as_str().unwrap()).collect();
    let reg: Vec<String> = registry(None).into_iter().map(|s| s.id).collect();
    assert_eq!(ids, reg);
}

#[test]
fn unknown_scenario_is_usage_error() {
    assert_eq!(verify(&["--scenario", "nonexistent"]).status.code(), Some(2));
    assert_eq!(verify(&["--field", "Q(pi)"]).status.code(), Some(2));
    assert_eq!(verify(&["--format", "xml"]).status.code(), Some(2));
}

#[test]
fn field_restricts_parametrized_scenarios() {
    let out = verify(&["--scenario", "realization/Q(zeta24)", "--field", "Q(zeta24)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenarios"].as_array().unwrap().len(), 1);
}

const DIC12_DOC: &str = r#"{"surface": "x0^3+x1^3+x2^3+x3^3", "generators": ["[1,2,1,2]", "(1234)"], "field": "Q(i)"}"#;

#[test]
fn fermat_dic12_document() {
    let doc = parse_input_str(DIC12_DOC).unwrap();
    let r = check_input(&doc).unwrap();
    assert_eq!(r.check("group-order").unwrap().detail, 12);
    assert!(r.checks.iter().all(|c| c.passed()));
    let out = verify(&["--input", temp_doc("dic12", DIC12_DOC).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dic12_family_text_parses_to_smooth_surface() {
    let doc = r#"{"surface": "8*x0^3 + 8*x1^3 - 12*x0^2*x1 - 12*x0*x1^2 + 4*x1*x2*x3 + 2*x0*x3^2 - 2*x1*x2^2 - 4*x0*x2*x3",
                   "generators": [], "field": "Q(i)"}"#;
    let parsed = parse_input_str(doc).unwrap();
    let two_i = &imag_unit() * &CycNum::from_int(2);
    let model = models::dic12_surface(&CycNum::one(), &two_i).unwrap();
    assert!(parsed.surface.poly().proportional_to(model.poly()).is_some());
    assert!(check_input(&parsed).unwrap().check("smooth").unwrap().passed());
}

#[test]
fn singular_matrix_rejected() {
    let doc = r#"{"surface": "x0^3+x1^3+x2^3+x3^3", "generators": [[[1,0,0,0],[0,1,0,0],[0,0,1,0],[1,1,1,0]]], "field": "Q"}"#;
    assert_eq!(parse_input_str(doc).err().unwrap().pointer, "/generators/0");
    let out = verify(&["--input", temp_doc("singular", doc).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn falsified_document_exits_one_with_detail() {
    let doc = r#"{"surface": "x0^3+x1^3+x2^3+x3^3", "generators": [[[1,1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]], "field": "Q"}"#;
    let out = verify(&["--input", temp_doc("false", doc).to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenarios"][0]["status"], "fail");
}
