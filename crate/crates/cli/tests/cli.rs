use std::process::{Command, Output};

use ringgraph::theorems::{AnalysisReport, Verdict};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn dot_counts(dot: &str) -> (usize, usize) {
    let vertices = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    (vertices, edges)
}

#[test]
fn analyze_z45_matches() {
    let out = run(&["analyze", "Z45"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.contains("tau_domination")).unwrap();
    assert!(
        row.contains("match") && row.contains("predicted 3  computed 3"),
        "{row}"
    );
}

#[test]
fn analyze_json_round_trips() {
    let out = run(&["analyze", "Z2 x Z2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let report = AnalysisReport::from_json(&text).unwrap();
    assert_eq!(format!("{}\n", report.to_json()), text);
    let euler = report.row("tau_eulerian").unwrap();
    assert_eq!(euler.computed, Value::Bool(true));
    assert_eq!(euler.verdict, Verdict::Match);
}

#[test]
fn analyze_reports_non_isomorphism() {
    let out = run(&["analyze", "Z3 x GF(4)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    let iso = report.row("tau_iso_cayley").unwrap();
    assert_eq!(
        (iso.computed.clone(), iso.verdict),
        (Value::Bool(false), Verdict::Match)
    );
}

#[test]
fn analyze_exit_codes() {
    let out = run(&["analyze", "Z4 + Z3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
    assert_eq!(run(&["analyze", "Z0"]).status.code(), Some(2));
    // exact domination of tau(Z3 x Z3) is 2, below the formula
    assert_eq!(run(&["analyze", "Z3 x Z3"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn empty_sweep() {
    let out = run(&["sweep", "--max-order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("rings 0  match 0  skipped 0  mismatch 0"));
}

#[test]
fn sweep_to_sixteen() {
    let out = run(&["sweep", "--max-order", "16", "--json", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let summary: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["rings"], 58);
    assert_eq!(summary["mismatches"], 1);
    let failing: Vec<&str> = summary["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| {
            e["report"]["rows"]
                .as_array()
                .unwrap()
                .iter()
                .any(|r| r["verdict"] == "mismatch")
        })
        .map(|e| e["spec"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["Z3 x Z3"]);
}

#[test]
fn sweep_skip_iso() {
    let out = run(&["sweep", "--max-order", "64", "--skip-iso", "--json"]);
    let summary: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut mismatched = Vec::new();
    for entry in summary["entries"].as_array().unwrap() {
        for row in entry["report"]["rows"].as_array().unwrap() {
            if row["property"] == "tau_iso_cayley" {
                assert_eq!(row["verdict"], "skipped");
            } else if row["verdict"] == "mismatch" {
                mismatched.push(format!(
                    "{} {}",
                    entry["spec"].as_str().unwrap(),
                    row["property"].as_str().unwrap()
                ));
            }
        }
    }
    assert_eq!(
        mismatched,
        vec![
            "Z3 x Z3 tau_domination",
            "Z5 x Z5 tau_domination",
            "Z3 x Z3 x Z3 tau_domination",
            "Z7 x Z7 tau_domination",
        ]
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dot_exports() {
    let out = run(&["dot", "Z2 x Z2", "--graph", "tau"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(dot_counts(&stdout(&out)), (4, 4));
    // three K4 on {a} x GF(4) plus four triangles on Z3 x {b}
    assert_eq!(
        dot_counts(&stdout(&run(&["dot", "Z3 x GF(4)", "--graph", "cayley"]))),
        (12, 30)
    );
    assert_eq!(
        dot_counts(&stdout(&run(&["dot", "GF(8)", "--graph", "tau"]))),
        (8, 0)
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.dot");
    let out = run(&["dot", "Z2 x Z2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("graph G {"));
    assert!(written.contains("[label=\"(1,1)\"]"));
}

#[test]
fn dominate_z45() {
    let out = run(&["dominate", "Z45"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("witness {(0,0), (1,0), (2,0)}"), "{text}");
    assert!(text.contains("dominating verified"));
    let json: Value = serde_json::from_str(&stdout(&run(&["dominate", "F7", "--json"]))).unwrap();
    assert_eq!(json["witness"].as_array().unwrap().len(), 4);
    assert_eq!(json["exact"], 4);
}

#[test]
fn iso_commands() {
    let out = run(&["iso", "Z4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("isomorphic: condition A map verified"));

    let out = run(&["iso", "Z3 x GF(4)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("not isomorphic"));
    assert!(text.contains("oracle no"));

    let json: Value = serde_json::from_str(&stdout(&run(&["iso", "Z2 x Z3", "--json"]))).unwrap();
    assert_eq!(json["witness_condition"], "B");
    assert_eq!(json["witness_verified"], true);
}
