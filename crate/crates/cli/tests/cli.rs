use std::process::{Command, Output};

use serde_json::Value;

fn topo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topo2x2")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = topo(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn analyze_by_each_identifier_kind() {
    for ident in ["111", "game(1,4;3,3/2,2;4,1)", "44-111"] {
        let doc = json(&["analyze", ident]);
        assert_eq!(doc["id"], "111", "{ident}");
        assert_eq!(doc["family"]["subfamily"], "PrisonersDilemma");
        assert_eq!(doc["analysis"]["nash_payoffs"], serde_json::json!([[2, 2]]));
    }
    let flipped = json(&["analyze", "game(2,2;4,1/1,4;3,3)"]);
    assert_eq!(flipped["id"], "111");
    assert_eq!(flipped["quadrant"], "SE");
    let tied = json(&["analyze", "11-1"]);
    assert_eq!(tied["payoff_string"], "game(1,1;1,1/1,1;1,1)");
    assert!(tied["family"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(topo(&["analyze", "999"]).status.code(), Some(2));
    assert_eq!(topo(&["analyze", "game(1,4;3,3/2,2"]).status.code(), Some(2));
    assert_eq!(topo(&["analyze", "game(1,4;3,3/2,2;4,9)"]).status.code(), Some(2));
    assert_eq!(topo(&["path", "111", "11-1"]).status.code(), Some(2));
    assert_eq!(topo(&["normalize", "--payoffs", "1,2,3"]).status.code(), Some(2));
    assert_eq!(topo(&["sample", "--n", "0"]).status.code(), Some(2));
    assert_eq!(topo(&["nonsense"]).status.code(), Some(1));
    assert_eq!(topo(&["analyze"]).status.code(), Some(1));
    assert_eq!(topo(&["--help"]).status.code(), Some(0));
    assert_eq!(topo(&["--version"]).status.code(), Some(0));
    let err = topo(&["analyze", "game(1,4;3,3/2,2"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("position"));
}

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate"]).as_array().unwrap().len(), 144);
    assert_eq!(json(&["enumerate", "--ties"]).as_array().unwrap().len(), 1413);
    let csv = topo(&["enumerate", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 145);
}

#[test]
fn neighbors_and_paths() {
    let n = json(&["neighbors", "111"]);
    assert_eq!(n["neighbors"].as_array().unwrap().len(), 6);
    let high = json(&["neighbors", "111", "--kinds", "high"]);
    assert_eq!(high["neighbors"].as_array().unwrap().len(), 2);
    let half = json(&["neighbors", "11-1", "--kinds", "half"]);
    assert!(!half["neighbors"].as_array().unwrap().is_empty());

    let p = json(&["path", "111", "166", "--kinds", "low"]);
    assert_eq!(p["length"], 2);
    let p = json(&["path", "111", "111"]);
    assert_eq!(p["length"], 0);
    let t = json(&["tiepath", "111", "11-1"]);
    assert_eq!(t["length"], 6);
}

#[test]
fn censuses() {
    let fam = json(&["census"]);
    assert_eq!(fam["by_family"]["Cyclic"], 18);
    assert_eq!(fam["by_subfamily"]["Samaritan"], 24);
    let ties = json(&["census", "--ties"]);
    assert_eq!(ties["total"], 1413);
    assert_eq!(ties["player_swap_total"], 726);
    assert_eq!(ties["matrix"][7][7], 144);
    assert_eq!(topo(&["census", "--ties", "--by", "family"]).status.code(), Some(1));
}

#[test]
fn exports() {
    let atlas = json(&["export", "--what", "atlas"]);
    assert_eq!(atlas["games"].as_array().unwrap().len(), 144);
    let ui = json(&["export", "--what", "ui-data", "--scroll", "0,0"]);
    assert_eq!(ui["ui"]["default_scroll"], serde_json::json!([0, 0]));
    assert_eq!(ui["ui"]["cells"].as_array().unwrap().len(), 144);

    let dot = topo(&["export", "--what", "dot", "--tile", "111"]);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 4);

    let path = std::env::temp_dir().join(format!("topo2x2-chart-{}.svg", std::process::id()));
    let out = topo(&["export", "--what", "chart", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn sampling_is_reproducible() {
    let a = topo(&["sample", "--n", "2000", "--seed", "9", "--dist", "gaussian"]);
    let b = topo(&["sample", "--n", "2000", "--seed", "9", "--dist", "gaussian"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    let total: u64 = doc["counts"].as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(total + doc["ties"].as_u64().unwrap(), 2000);
}

#[test]
fn normalize_reals() {
    let doc = json(&["normalize", "--payoffs", "-1 3 2 2 0 0 3 -1"]);
    assert_eq!(doc["game"]["id"], "111");
    let tied = json(&["normalize", "--payoffs", "0,3,2,2,0.05,0,3,-1", "--tol", "0.1"]);
    assert!(tied["game"]["strict_id"].is_null());
}
