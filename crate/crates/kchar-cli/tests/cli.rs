use std::process::{Command, Output};

use kchar::module_id::CharacterReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kchar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn char_json(args: &[&str]) -> CharacterReport {
    let mut full = vec!["char"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid report")
}

fn nonzero(rep: &CharacterReport) -> Vec<usize> {
    rep.coeffs.iter().filter(|(_, c)| c != "0").map(|(i, _)| *i).collect()
}

#[test]
fn sp4_principal_base_module() {
    let rep = char_json(&["--case", "sp4-principal", "--a", "3/2", "--b", "1/2", "--s", "0", "--order", "18"]);
    assert_eq!(nonzero(&rep), vec![0, 6, 12, 18]);
    assert!(rep.coeffs.iter().all(|(_, c)| c == "0" || c == "1"));
    assert_eq!(rep.module.case, "sp4-principal");
    assert_eq!(rep.module.params["a"], "3/2");
}

#[test]
fn closed_forms_are_reported() {
    let rep = char_json(&["--case", "sl3-root", "--sign", "+", "--a", "0", "--b", "1/2", "--order", "5"]);
    assert_eq!(rep.closed_form.numerator, vec![(0, "1".to_string())]);
    assert_eq!(rep.closed_form.denominator_factors, vec![1]);
    let rep = char_json(&["--case", "sl2sl2", "--n", "5", "--order", "9"]);
    assert_eq!(rep.closed_form.numerator, vec![(5, "1".to_string())]);
    assert_eq!(rep.closed_form.denominator_factors, vec![2]);
    assert_eq!(nonzero(&rep), vec![5, 7, 9]);
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["--case", "sp4-principal", "--a", "7/2", "--b", "-3/2", "--s", "1"],
        &["--case", "sp4-principal", "--a", "11/2", "--b", "5/2", "--s", "0"],
        &["--case", "sp4-root", "--a", "7/2", "--b", "1/2"],
        &["--case", "sp4-root", "--a", "9/2", "--b", "-5/2", "--dual"],
        &["--case", "sl3-root", "--sign", "-", "--a", "3", "--b", "1"],
        &["--case", "sl3-root", "--sign", "+", "--a", "4", "--b", "-3"],
        &["--case", "sl3-principal", "--family", "J", "--u", "-3/2", "--n", "3"],
        &["--case", "sl3-principal", "--family", "I-tau", "--u", "-2", "--n", "2"],
        &["--case", "sl2sl2", "--a", "1/3", "--n", "4"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend_from_slice(&["--order", "60"]);
        let rep = char_json(&full);
        let back = rep.closed_form.to_rational().unwrap().expand(rep.order).unwrap();
        assert_eq!(back, rep.coefficients().unwrap(), "{args:?}");
    }
}

#[test]
fn default_order_is_128() {
    let rep = char_json(&["--case", "sl2sl2", "--n", "0"]);
    assert_eq!(rep.order, 128);
    assert_eq!(rep.coeffs.len(), 129);
}

#[test]
fn csv_output() {
    let o = run(&["char", "--case", "sl3-root", "--sign", "+", "--a", "2", "--b", "-1/2", "--order", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "exponent,multiplicity\n0,1\n1,2\n2,3\n3,3\n4,3\n");
}

#[test]
fn invalid_parameters_exit_2() {
    let o = run(&["char", "--case", "sp4-principal", "--a", "1/2", "--b", "3/2", "--s", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("a > |b|"));
    let o = run(&["char", "--case", "sl2sl2", "--a", "2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["char", "--case", "sp4-root", "--a", "1/3", "--b", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["char", "--case", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["classify", "--case", "sl3-principal", "--u", "0", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

fn classify_json(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["classify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classification_counts() {
    let v = classify_json(&["--case", "sl3-principal", "--u", "1/2", "--n", "0"]);
    let fams: Vec<&str> = v.iter().map(|x| x["module"]["family"].as_str().unwrap()).collect();
    assert_eq!(fams, vec!["I+", "I-", "J"]);
    assert_eq!(classify_json(&["--case", "sp4-root", "--a", "3/2", "--b", "1/2"]).len(), 2);
    assert_eq!(classify_json(&["--case", "sl3-principal", "--u", "5", "--n", "1"]).len(), 4);
    assert_eq!(classify_json(&["--case", "sp4-principal", "--a", "3/2", "--b", "1/2"]).len(), 4);
}

#[test]
fn gate_and_enumerate() {
    let o = run(&["gate", "--g", "sl3", "--k", "sl2"]);
    assert_eq!(stdout(&o).trim(), "PASS (2 ≤ 2)");
    let o = run(&["gate", "--g", "g2", "--k", "sl2"]);
    assert!(stdout(&o).starts_with("FAIL"));
    let o = run(&["gate", "--g", "sl2+sl2", "--k", "sl2", "--strict"]);
    assert!(stdout(&o).starts_with("PASS"));
    let o = run(&["enumerate", "--algebra", "so9", "--thA", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ws: Vec<Value> = v["modules"].as_array().unwrap().iter().map(|m| m["weight"].clone()).collect();
    assert_eq!(ws, vec![serde_json::json!([1, 0, 0, 0]), serde_json::json!([0, 0, 0, 1])]);
}

#[test]
fn mfree_scan() {
    let o = run(&["mfree", "--case", "sp4-principal", "--max-a", "21/2", "--format", "json"]);
    let v: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 16);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--suite", "cg-dimension", "--max-a", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS cg-dimension"));
    let o = run(&["verify", "--suite", "sl3-root-induced", "--seed-fault", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["passed"], Value::Bool(false));
    assert!(v[0]["first_counterexample"].as_str().unwrap().contains("exponent 3"));
    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
