use std::process::Command;

use capelli_cli::run;
use capelli_core::exactalg::{int, rat};
use capelli_core::{MultiPoly, Partition};
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["capelli"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn poly_of(v: &Value) -> MultiPoly {
    MultiPoly::from_json_str(&v["poly"].to_string()).unwrap()
}

#[test]
fn eigenvalue_example() {
    let v = json(&["eigenvalue", "--lambda", "1", "--mu", "1", "--d", "1", "--n", "2", "--r", "1"]);
    let s = MultiPoly::var("s");
    assert_eq!(poly_of(&v), &s.pow(2).scale(&int(4)) - &MultiPoly::constant(int(4)));
    let v = json(&["eigenvalue", "--lambda", "1", "--mu", "1", "--d", "1", "--n", "2", "--r", "1", "--s", "1/2"]);
    assert_eq!(poly_of(&v), MultiPoly::constant(int(-3)));
}

#[test]
fn lr_example() {
    let v = json(&["lr", "--nu", "2,1", "--lambda", "1,1", "--mu", "1"]);
    assert_eq!(v["coefficient"], 1);
}

#[test]
fn okounkov_example_and_methods_agree() {
    let v = json(&["okounkov", "--lambda", "1", "--r", "1", "--tau", "1/2"]);
    let x = MultiPoly::var("x1");
    let a = MultiPoly::var("alpha");
    assert_eq!(poly_of(&v), &x.pow(2) - &a.pow(2));
    let c = json(&["okounkov", "--lambda", "2,1", "--r", "2", "--tau", "2", "--alpha", "1/3"]);
    let w = json(&["okounkov", "--lambda", "2,1", "--r", "2", "--tau", "2", "--alpha", "1/3", "--method", "vanishing"]);
    assert_eq!(poly_of(&c), poly_of(&w));
}

#[test]
fn emitted_polynomials_round_trip() {
    let v = json(&["jack", "--lambda", "2,1", "--r", "3", "--tau", "1/2"]);
    let p = poly_of(&v);
    assert_eq!(
        p.to_json_string(),
        serde_json::to_string(&serde_json::from_value::<capelli_core::exactalg::PolyJson>(v["poly"].clone()).unwrap())
            .unwrap()
    );
    assert_eq!(v["coefficients"][0]["mu"], "2,1");
    assert_eq!(v["coefficients"][0]["coef"], "1");
}

#[test]
fn branch_outputs() {
    let v = json(&["branch", "--d", "2", "--n", "4", "--r", "2", "--m", "1"]);
    let labels: Vec<String> = serde_json::from_value(v["labels"].clone()).unwrap();
    assert_eq!(labels, vec!["", "1", "1,1"]);
    let v = json(&["branch", "--d", "1", "--n", "2", "--r", "1", "--mu", "2", "--lambda", "2"]);
    assert_eq!(v["multiplicity"], 1);
}

#[test]
fn weyl_apply_command() {
    let op = r#"{"vars":["y1"],"terms":[{"x":[1],"d":[1],"coef":"1"}]}"#;
    let p = MultiPoly::var("y1").pow(2).to_json_string();
    let out = run(["capelli", "weyl", "apply", "--op", op, "--poly", &p]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let q = MultiPoly::from_json_str(&out.stdout).unwrap();
    assert_eq!(q, MultiPoly::var("y1").pow(2).scale(&int(2)));
}

#[test]
fn single_appendix_case() {
    let v = json(&["verify", "appendix", "--d", "1", "--n", "3", "--r", "1"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["normal_form_sizes"]["lhs"], v["normal_form_sizes"]["rhs"]);
    let out = run(["capelli", "verify", "appendix", "--d", "2", "--n", "2", "--r", "1"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["residual_euler_multiple"], "-2");
}

#[test]
fn report_schema() {
    let out = run(["capelli", "verify", "rho", "--max-r", "1", "--max-n", "3"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["suite"], "rho");
    assert_eq!(v["pass"], true);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 6);
    assert_eq!(cases[0]["params"]["d"], 1);
    assert!(cases.iter().all(|c| c["pass"] == true && c["witness"].is_object()));
    assert!(out.stderr.contains("6 cases"));
}

#[test]
fn failing_suite_carries_witness() {
    let out = run(["capelli", "verify", "stanley", "--max-m", "2", "--max-r", "2"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let failed: Vec<&Value> = v["cases"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failed.len(), 2);
    assert_eq!(failed[0]["witness"]["lhs"]["1,1"], "2");
    assert_eq!(failed[0]["witness"]["rhs"]["1,1"], rat(4, 3).to_string());
}

#[test]
fn deterministic_across_runs_and_thread_counts() {
    let args = ["verify", "vanishing", "--max-size", "2", "--max-r", "2"];
    let (c1, a) = bin(&[&args[..], &["--jobs", "1"]].concat());
    let (c2, b) = bin(&[&args[..], &["--jobs", "4"]].concat());
    let (_, c) = bin(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert_eq!(b, c);
    let (_, x) = bin(&["jack", "--lambda", "3,1", "--r", "3", "--tau", "2", "--csv"]);
    let (_, y) = bin(&["jack", "--lambda", "3,1", "--r", "3", "--tau", "2", "--csv"]);
    assert_eq!(x, y);
    assert!(x.starts_with("mu,coef\n\"3,1\",1\n"), "{}", x);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify", "rho", "--max-r", "1", "--max-n", "2"]).0, 0);
    assert_eq!(bin(&["verify", "appendix"]).0, 1);
    assert_eq!(bin(&["verify", "nope"]).0, 2);
    assert_eq!(bin(&["verify", "rho", "--max-r", "0"]).0, 2);
    assert_eq!(bin(&["eigenvalue", "--lambda", "1", "--mu", "1", "--d", "3", "--n", "2", "--r", "1"]).0, 2);
    assert_eq!(bin(&["eigenvalue", "--lambda", "1", "--mu", "1", "--d", "1", "--n", "1", "--r", "1"]).0, 2);
    assert_eq!(bin(&["okounkov", "--lambda", "1", "--r", "1", "--tau", "1/2", "--method", "vanishing"]).0, 2);
    assert_eq!(bin(&["lr", "--nu", "2,x", "--lambda", "1", "--mu", "1"]).0, 2);
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn partition_arguments_accept_empty() {
    let v = json(&["lr", "--nu", "2", "--lambda", "", "--mu", "2"]);
    assert_eq!(v["coefficient"], 1);
    assert_eq!(Partition::empty().to_csv(), "");
}
