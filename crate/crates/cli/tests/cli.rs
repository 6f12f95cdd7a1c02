use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_antidim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_recognizes_adim_one() {
    let report = json(&run(&["analyze", "--graph6", "Ch"], ""));
    assert_eq!(report["verdict"], "IS_ONE");
}

#[test]
fn family_pipes_into_oracle() {
    let family = run(&["family", "--name", "petersen"], "");
    let g6 = String::from_utf8(family.stdout).unwrap();
    assert_eq!(g6.trim(), "IheA@GUAo");
    let table = json(&run(&["oracle"], &g6));
    assert_eq!(table["adim"], 3);
}

#[test]
fn classify_order_seven() {
    let out = run(&["classify", "--enumerate", "7", "--format", "csv"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("order,total,connected,found,ratio,connectivity,max_density"));
    assert_eq!(lines.next(), Some("7,,853,2,0.002344,1:2,0.33"));
}

#[test]
fn edge_list_input_and_conversion() {
    let out = run(&["convert", "--to", "graph6"], "");
    assert_eq!(out.status.code(), Some(2));
    let cycle = run(&["family", "--name", "cycle", "--param", "5"], "");
    let edges = run(&["convert", "--to", "edges"], std::str::from_utf8(&cycle.stdout).unwrap());
    assert_eq!(String::from_utf8(edges.stdout).unwrap().lines().count(), 5);
}

#[test]
fn bad_input_exits_two() {
    let out = run(&["analyze", "--graph6", "!!"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["family", "--name", "nonexistent"], "").status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three_with_bounds() {
    let path = run(&["family", "--name", "path", "--param", "300"], "");
    let out = run(&["--budget", "0", "analyze"], std::str::from_utf8(&path.stdout).unwrap());
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["verdict"].is_null());
    assert!(!report["bounds"].as_array().unwrap().is_empty());
}
