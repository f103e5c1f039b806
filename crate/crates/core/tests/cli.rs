use std::process::{Command, Output};

use serde_json::Value;
use superk3::abelian::Atlas;
use superk3::gkm::{derive_incidence, GraphExport};
use superk3::reference::INTERSECTION_TABLE;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superk3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn verify_passes_with_documented_errata() {
    let text = stdout(&["verify"]);
    assert!(text.ends_with("all suites passed\n"));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("ERRATUM"));
}

#[test]
fn verify_strict_exits_with_first_suite_code() {
    // the first documented erratum lives in the ecurve suite
    assert_eq!(run(&["verify", "--strict"]).status.code(), Some(11));
    assert_eq!(run(&["verify", "--strict", "--suite", "gf2k"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--strict", "--suite", "gkm"]).status.code(), Some(15));
}

#[test]
fn verify_json_document() {
    let v = json(&["verify", "--format", "json"]);
    assert_eq!(v["schema_version"], 1);
    let suites: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        suites,
        ["gf2k", "ecurve", "quatorder", "nslattice", "abelian", "gkm", "models"]
    );
}

#[test]
fn intersection_table_rows() {
    let md = stdout(&["tables", "--which", "intersection"]);
    // rows with no entry against F0, V0, F0', V0' in the pi0' column
    for i in [0, 3, 4] {
        let name = ["E0", "F0", "V0", "pi0", "E0'"][i];
        let cells: Vec<String> = INTERSECTION_TABLE[i].iter().map(ToString::to_string).collect();
        assert!(md.contains(&format!("| {name} | {} |", cells.join(" | "))), "{name}");
    }
    let v = json(&["tables", "--which", "intersection", "--format", "json"]);
    assert_eq!(v["entries"][1][5], 3);
    assert_eq!(v["entries"][3][4], 3);
}

#[test]
fn torsion_tables() {
    let f2 = json(&["tables", "--which", "f2", "--format", "json"]);
    assert_eq!(f2["cells"].as_array().unwrap().len(), 9);
    let f4 = json(&["tables", "--which", "f4", "--format", "json"]);
    let cells = f4["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 72);
    assert_eq!(cells[0]["point"], "(1,w)x(1,w)");
    assert_eq!(stdout(&["tables", "--which", "f4"]).lines().count(), 11);
}

#[test]
fn derived_config_formats() {
    let dot = stdout(&["config", "--source", "derived", "--format", "dot"]);
    assert_eq!(dot.matches("[shape=").count(), 42);
    assert_eq!(dot.matches(" -- ").count(), 105);
    let export: GraphExport =
        serde_json::from_str(&stdout(&["config", "--source", "derived", "--format", "json"])).unwrap();
    assert_eq!(export.schema_version, 1);
    assert_eq!(export.into_graph().unwrap(), derive_incidence(&Atlas::new()).unwrap());
    let csv = stdout(&["config", "--source", "pg24", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 22);
}

#[test]
fn lattice_keys() {
    let v = json(&["lattice", "--format", "json"]);
    for key in ["order", "entries", "rank", "elementary_divisors", "discriminant"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["rank"], 22);
    assert_eq!(v["discriminant"], -4);
}

#[test]
fn iso_and_generators() {
    let v = json(&["iso", "--a", "derived", "--b", "p2p2", "--format", "json"]);
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 42);
    let miss = run(&["iso", "--a", "rules", "--b", "pg24"]);
    assert_eq!(miss.status.code(), Some(1));
    let g = json(&["generators", "--format", "json"]);
    assert_eq!(g["count"], 24);
    assert_eq!(g["solutions"].as_array().unwrap().len(), 1);
}

#[test]
fn fibration_text() {
    let text = stdout(&["fibration"]);
    assert_eq!(text.matches("(square 0)").count(), 4);
    assert!(text.contains("Euler number: 24"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "--which", "f2", "--bad"]).status.code(), Some(2));
    assert_eq!(run(&["config", "--source", "nowhere"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--format", "json"][..],
        &["iso", "--a", "pg24", "--b", "p2p2"],
        &["config", "--source", "rules", "--format", "dot"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
