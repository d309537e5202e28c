use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use wahlrank_core::GaussReport;

fn wahlrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wahlrank"))
        .args(args)
        .env("WAHLRANK_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reports(o: &Output) -> Vec<GaussReport> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn fermat_octic_two_orders() {
    let o = wahlrank(&["plane", "--curve", "fermat:8", "--k", "0..1", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let rs = reports(&o);
    assert_eq!(rs.iter().map(|r| r.rank).collect::<Vec<_>>(), vec![60, 90]);
    assert!(rs.iter().all(|r| r.matches));
}

#[test]
fn fermat_sextic_order_zero() {
    let o = wahlrank(&["plane", "--curve", "fermat:6", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let rs = reports(&o);
    assert_eq!((rs[0].rank, rs[0].matches), (27, true));
}

#[test]
fn report_json_round_trips() {
    let o = wahlrank(&["plane", "--d", "6..7", "--k", "0..1"]);
    for line in stdout(&o).lines() {
        let r: GaussReport = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), line);
    }
}

#[test]
fn output_ordered_by_degree_then_order() {
    let o = wahlrank(&["plane", "--curve", "fermat:8", "--curve", "fermat:6", "--d", "7", "--k", "0..1"]);
    let keys: Vec<(u32, u32)> = reports(&o).iter().map(|r| (r.d, r.k)).collect();
    assert_eq!(keys, vec![(6, 0), (6, 1), (7, 0), (7, 1), (8, 0), (8, 1)]);
}

#[test]
fn screening_mode_matches_exact() {
    let exact = reports(&wahlrank(&["plane", "--d", "6..8", "--k", "0..2"]));
    let screened = reports(&wahlrank(&["plane", "--d", "6..8", "--k", "0..2", "--mode", "modular-then-exact"]));
    let ranks = |rs: &[GaussReport]| rs.iter().map(|r| (r.d, r.k, r.rank, r.domain_dim)).collect::<Vec<_>>();
    assert_eq!(ranks(&exact), ranks(&screened));
    assert!(screened.iter().all(|r| r.arithmetic.to_string().starts_with("modular-then-exact:")));
}

#[test]
fn csv_layout_is_fixed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = wahlrank(&["plane", "--d", "7", "--k", "0..1", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "d,k,genus,domain_dim,rank,codomain_dim,corank,predicted_rank,predicted_corank,in_theorem_range,match"
    );
    assert_eq!(lines.next().unwrap(), "7,0,15,225,42,42,0,42,0,true,true");
    assert_eq!(lines.next().unwrap(), "7,1,15,183,60,70,10,,,false,false");
}

#[test]
fn curve_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("octic.json");
    fs::write(&path, r#"{"F": "x^8 + y^8 + 1 + 3*x^4*y^4"}"#).unwrap();
    let o = wahlrank(&["plane", "--curve", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(reports(&o)[0].corank, 10);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"F": "x^"}"#).unwrap();
    let o = wahlrank(&["plane", "--curve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at offset 2"));

    let singular = dir.path().join("singular.json");
    fs::write(&singular, r#"{"F": "(y - 1)*(x^3 + y^3 + 2)"}"#).unwrap();
    assert_eq!(wahlrank(&["plane", "--curve", singular.to_str().unwrap()]).status.code(), Some(2));

    for args in [
        vec!["plane", "--curve", "fermat:8", "--mode", "modular", "--primes", "7"],
        vec!["plane", "--curve", "fermat:8", "--k", "3..1"],
        vec!["plane", "--curve", "fermat:3"],
        vec!["plane"],
        vec!["plane", "--curve", "missing.json"],
        vec!["criteria", "product", "--g1", "1", "--g2", "2", "--d1", "7", "--d2", "9", "--k", "1"],
        vec!["criteria", "enriques", "--phi", "0", "--k", "1"],
    ] {
        assert_eq!(wahlrank(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn p1_reports() {
    let o = wahlrank(&["p1", "--a", "2", "--b", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["surjective"], Value::Bool(true));
    assert_eq!(v["prediction"], "surjective_by_i");
    assert_eq!(v["agree"], Value::Bool(true));

    let o = wahlrank(&["p1", "--a", "0..4", "--b", "0..4", "--k", "0"]);
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r["surjective"] == Value::Bool(true)));

    let o = wahlrank(&["p1", "--a", "1", "--b", "1", "--k", "1"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["prediction"].as_str(), v["agree"].as_bool()), (Some("no_conclusion"), Some(true)));
}

fn criteria(args: &[&str]) -> Value {
    let mut full = vec!["criteria"];
    full.extend_from_slice(args);
    let o = wahlrank(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    for key in ["query", "inputs", "result", "paper_statement"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    v
}

#[test]
fn criteria_answers() {
    assert_eq!(criteria(&["enriques", "--phi", "13", "--k", "1"])["result"], Value::Bool(true));
    assert_eq!(criteria(&["genus", "--g1", "0", "--g2", "2", "--d1", "9", "--d2", "7"])["result"], 66);
    assert_eq!(
        criteria(&["product", "--g1", "1", "--g2", "2", "--d1", "7", "--d2", "9", "--k", "2"])["result"],
        "case1"
    );
    let f = criteria(&["plane-formula", "--d", "10", "--k", "2"]);
    assert_eq!(f["result"]["rank"], "210");
    let sweep = criteria(&["sweep-min-genus", "--g1", "0", "--g2", "2", "--k", "2", "--bound", "100"]);
    assert_eq!(sweep["result"]["minimum"]["genus"], 182);
}
