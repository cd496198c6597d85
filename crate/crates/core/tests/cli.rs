use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliqueminor")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn census_of_a_four_cycle() {
    let out = run(&["census", "--graph", "4 4\\n0 1\\n1 2\\n2 3\\n3 0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], "9");
    assert_eq!(v["omega"], 2);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn graph6_input_matches_edge_list() {
    let a = json(&run(&["census", "--format", "graph6", "--graph", "Cr"]));
    let b = json(&run(&["census", "--graph", "4 4\\n0 1\\n1 2\\n2 3\\n3 0"]));
    assert_eq!(a, b);
}

#[test]
fn bound_for_k6() {
    let v = json(&run(&["bound", "--family", "k6"]));
    assert_eq!(v["count"], "54");
    assert_eq!(v["shape"]["a"], 3);
    assert_eq!(v["shape"]["b"], 1);
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "census-oracle", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "census-oracle");
}

#[test]
fn bad_input_exits_one_with_error_json() {
    let out = run(&["census", "--graph", "2 1\\n0 5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("line 2"));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
}
