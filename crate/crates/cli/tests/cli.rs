use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eccentric")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eccentric"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn bound_at_seven_three() {
    let o = run(&["formula", "f", "--n", "7", "--d", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("value=65"), "{}", stdout(&o));
    let o = run(&["formula", "f", "--n", "7", "--d", "3", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["outputs"]["value"], 65);
}

#[test]
fn fixed_diameter_record_lists_two_certificates() {
    let o = run(&["verify", "theorem5", "--n", "6", "--d", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let records = json_lines(&o);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["kind"], "theorem5");
    assert_eq!(records[0]["verdict"], "PASS");
    assert_eq!(records[0]["outputs"]["achiever_certs"].as_array().unwrap().len(), 2);
    assert_eq!(records[0]["outputs"]["observed_max"], 44);
}

#[test]
fn count_of_order_four() {
    let o = run(&["enumerate", "--n", "4", "--count", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["outputs"]["count"], 6);
    let o = run(&["enumerate", "--n", "5", "--emit-g6"]);
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = run(&["enumerate", "--n", "6", "--diameter", "2", "--count", "--format", "json"]);
    assert!(json_lines(&o)[0]["outputs"]["count"].as_u64().unwrap() > 0);
}

#[test]
fn json_and_csv_carry_the_same_data() {
    let args = ["verify", "conjecture", "--n", "6", "--all-m"];
    let json = json_lines(&run(&[&args[..], &["--format", "json"]].concat()));
    let csv_out = stdout(&run(&[&args[..], &["--format", "csv"]].concat()));
    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["kind", "verdict", "inputs", "outputs"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), json.len());
    for (row, record) in rows.iter().zip(&json) {
        assert_eq!(row[0], record["kind"].as_str().unwrap().to_string());
        assert_eq!(row[1], record["verdict"].as_str().unwrap_or("").to_string());
        assert_eq!(serde_json::from_str::<Value>(&row[2]).unwrap(), record["inputs"]);
        assert_eq!(serde_json::from_str::<Value>(&row[3]).unwrap(), record["outputs"]);
    }
    // the last record is the tally
    assert_eq!(json.last().unwrap()["kind"], "conjecture_tally");
}

#[test]
fn worker_count_does_not_change_reports() {
    let args = ["verify", "theorem5", "--n", "7", "--format", "json"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "table1", "--n", "3", "--to", "6"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["formula", "f", "--n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "theorem5", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["eci", "--g6", "/nonexistent/file.g6"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--family", "extremal:5,9,0"]).status.code(), Some(2));
}

#[test]
fn failing_verdict_exits_one() {
    // a lone spider of diameter 3 is not the predicted maximizer
    let o = run_stdin(&["verify", "theorem5", "--n", "5", "--d", "3", "--g6", "-", "--format", "json"], "DhO\n");
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let records = json_lines(&o);
    assert_eq!(records[0]["verdict"], "FAIL");
    assert!(!records[0]["outputs"]["offenders"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_graph6_names_the_line() {
    let o = run_stdin(&["eci"], "C~\n\nD?{\nC~~\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn index_of_piped_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    // K4 and the star on five vertices
    std::fs::write(&path, ">>graph6<<C~\nD?{\n").unwrap();
    let o = run(&["eci", "--g6", path.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let records = json_lines(&o);
    assert_eq!(records[0]["outputs"]["eci"], 12);
    assert_eq!(records[1]["outputs"]["eci"], 12);
    assert_eq!(records[1]["outputs"]["vertices"][4]["degree"], 4);
}

#[test]
fn ingested_census_matches_enumeration() {
    let listing = stdout(&run(&["enumerate", "--n", "7", "--emit-g6"]));
    let piped = run_stdin(&["verify", "table1", "--n", "7", "--g6", "-", "--format", "json"], &listing);
    let direct = run(&["verify", "table1", "--n", "7", "--format", "json"]);
    let (a, b) = (json_lines(&piped), json_lines(&direct));
    assert_eq!(a[0]["outputs"], b[0]["outputs"]);
    assert_eq!(a[0]["verdict"], "PASS");
}

#[test]
fn construct_and_relabel() {
    let o = run(&["construct", "--family", "extremal:9,5,3", "--emit-g6", "--format", "json"]);
    let r = &json_lines(&o)[0];
    assert_eq!(r["outputs"]["eci"], 134);
    assert_eq!(r["outputs"]["diameter"], 5);
    let a = run(&["construct", "--family", "h3", "--relabel", "--seed", "5", "--emit-g6", "--format", "json"]);
    let b = run(&["construct", "--family", "h3", "--relabel", "--seed", "5", "--emit-g6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_lines(&a)[0]["outputs"]["eci"], FAMILY_H3_ECI);
}

// H3 is a maximizer at order 7 and diameter 3
const FAMILY_H3_ECI: u64 = 65;

#[test]
fn sweeps_and_lemma() {
    let o = run(&["verify", "corollaries", "--n", "60", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["verdict"], "PASS");
    let o = run(&["verify", "lollipop", "--n", "40", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["verdict"], "PASS");
    let o = run(&["verify", "lemma1", "--n", "6", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["verdict"], "PASS");
    // C_7, then a triangle that is skipped
    let o = run_stdin(&["verify", "lemma1", "--g6", "-", "--format", "json"], "FhCKG\nBw\n");
    let records = json_lines(&o);
    assert_eq!(records[0]["verdict"], "PASS");
    assert!(records[1]["outputs"]["skipped"].is_string());
}

#[test]
fn diameter_two_flags_order_five() {
    let o = run(&["verify", "theorem2", "--n", "4", "--to", "8", "--format", "json"]);
    let records = json_lines(&o);
    assert_eq!(records.len(), 5);
    assert!(records.iter().all(|r| r["verdict"] == "PASS"));
    assert_eq!(records[1]["outputs"]["observed_max"], 28);
    assert!(records[1]["outputs"]["notes"][0].as_str().unwrap().contains("30"));
}
