use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tropical::floor::io::{records_from_json, records_to_json};
use tropical::plane::io::{curve_from_json, curve_to_json};
use tropical::PlaneCurve;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropical")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn counts() {
    assert_eq!(ok(&["count", "-d", "3", "-g", "0"]), "12\n");
    assert_eq!(ok(&["count", "-d", "3", "-g", "0", "--real"]), "8\n");
    assert_eq!(ok(&["count", "-d", "4", "-g", "1"]), "225\n");
    assert_eq!(ok(&["count", "--degree", "4", "--genus", "1", "--real"]), "93\n");
    assert_eq!(ok(&["count", "-d", "1"]), "1\n");
    assert_eq!(ok(&["count", "-d", "2", "-g", "3"]), "0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "-d", "7", "-g", "0"]).status.code(), Some(2));
    assert_eq!(run(&["count", "-d", "3", "-g", "9"]).status.code(), Some(2));
    assert_eq!(run(&["count", "-d", "0"]).status.code(), Some(1));
    assert_eq!(run(&["count"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["count", "-d", "x"]).status.code(), Some(1));
    assert_eq!(run(&["diagrams", "-d", "3", "--format", "svg"]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent/curve.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn diagram_listings() {
    let three = ok(&["diagrams", "-d", "3", "-g", "0", "--format", "json"]);
    assert_eq!(records_from_json(&three).unwrap().len(), 3);
    let marked = ok(&["diagrams", "-d", "3", "-g", "0", "--marked"]);
    let records = records_from_json(&marked).unwrap();
    assert_eq!(records.len(), 9);
    assert!(records.iter().all(|r| r.marking.as_ref().map(Vec::len) == Some(8)));
    let eleven = ok(&["diagrams", "-d", "4", "-g", "1", "--format", "json"]);
    assert_eq!(records_from_json(&eleven).unwrap().len(), 11);
    // byte-identical round trip and determinism
    assert_eq!(records_to_json(&records), marked);
    assert_eq!(ok(&["diagrams", "-d", "3", "-g", "0", "--marked"]), marked);

    let dot = ok(&["diagrams", "-d", "3", "-g", "0", "--format", "dot"]);
    assert_eq!(dot.matches("digraph").count(), 3);
    let text = ok(&["diagrams", "-d", "3", "-g", "0", "--format", "text"]);
    let mut counts: Vec<&str> = text.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    counts.sort();
    assert_eq!(counts, ["1", "3", "5"]);
}

#[test]
fn curves() {
    let dir = tempfile::tempdir().unwrap();
    let line = write(dir.path(), "line.txt", "0 0 0\n1 0 0\n0 1 0\n");
    let json = ok(&["curve", s(&line)]);
    let c: PlaneCurve = curve_from_json(&json).unwrap();
    assert_eq!(c.vertices.len(), 1);
    assert_eq!(c.edges.len(), 3);
    assert_eq!(curve_to_json(&c), json);

    let single = write(dir.path(), "one.txt", "# lonely\n2 1 5\n");
    let out = run(&["curve", s(&single)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert!(curve_from_json::<tropical::Rational>(&stdout(&out)).unwrap().is_empty());

    let cubic =
        write(dir.path(), "cubic.txt", "0 0 0\n1 0 2\n2 0 3\n3 0 3\n0 1 2\n1 1 5\n2 1 5\n0 2 3\n1 2 5\n0 3 3\n");
    let text = ok(&["curve", s(&cubic), "--format", "text"]);
    assert!(text.contains("degree 3"));
    let curve = write(dir.path(), "cubic.json", &ok(&["curve", s(&cubic)]));
    assert_eq!(ok(&["check", s(&curve)]), "balanced\n");
    let svg = ok(&["curve", s(&cubic), "--format", "svg"]);
    assert!(svg.starts_with("<svg"));

    let bad = write(dir.path(), "bad.txt", "0 0 0\n1 0 one\n");
    let out = run(&["curve", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));

    let unbalanced = write(
        dir.path(),
        "unbalanced.json",
        r#"{"vertices":[["0","0"]],"edges":[{"ray":0,"primitive":[1,0],"weight":1}]}"#,
    );
    assert_eq!(run(&["check", s(&unbalanced)]).status.code(), Some(3));
}

#[test]
fn reconstruction() {
    let dir = tempfile::tempdir().unwrap();
    let marked = write(dir.path(), "marked.json", &ok(&["diagrams", "-d", "3", "-g", "0", "--marked"]));
    let svg = ok(&["reconstruct", s(&marked), "--seed", "7"]);
    assert!(svg.starts_with("<svg") && svg.contains("fill=\"red\""));
    for k in 0..9 {
        let json = ok(&["reconstruct", s(&marked), "--index", &k.to_string(), "--seed", "7", "--format", "json"]);
        let curve = write(dir.path(), "curve.json", &json);
        assert_eq!(ok(&["check", s(&curve)]), "balanced\n");
    }

    let squashed: Vec<String> = (0..8).map(|k| format!("[{k},{k}]")).collect();
    let squashed = write(dir.path(), "squashed.json", &format!("{{\"points\":[{}]}}", squashed.join(",")));
    let out = run(&["reconstruct", s(&marked), "--config", s(&squashed)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("insufficiently stretched"));

    let short = write(dir.path(), "short.json", r#"{"points":[[0,0],[1,1000]]}"#);
    assert_eq!(run(&["reconstruct", s(&marked), "--config", s(&short)]).status.code(), Some(1));
    assert_eq!(run(&["reconstruct", s(&marked), "--index", "9"]).status.code(), Some(1));
    let unmarked = write(dir.path(), "plain.json", &ok(&["diagrams", "-d", "3", "-g", "0"]));
    assert_eq!(run(&["reconstruct", s(&unmarked)]).status.code(), Some(1));
}

#[test]
fn free_energy() {
    assert_eq!(ok(&["free-energy", "0", "-t", "1"]), "0\n");
    assert_eq!(ok(&["free-energy", "0,1", "-t", "1"]), "-0.313261687518\n");
    let cold: f64 = ok(&["free-energy", "0,1", "--temperature", "0.001"]).trim().parse().unwrap();
    assert!(cold.abs() < 5e-13);
    assert_eq!(run(&["free-energy", "1,0", "-t", "1"]).status.code(), Some(1));
    assert_eq!(run(&["free-energy", "0,1", "-t", "0"]).status.code(), Some(1));
    assert_eq!(run(&["free-energy", "0,a", "-t", "1"]).status.code(), Some(1));
}
