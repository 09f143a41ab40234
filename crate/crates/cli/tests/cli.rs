use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const ONES3: &str = "3\n1 1 1\n1 1 1\n1 1 1\n";
const K4: &str = "p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const BOWTIE: &str = "c two triangles sharing vertex 1\np tw 5 6\n1 2\n2 3\n3 1\n1 4\n4 5\n5 1\n";
const DCYCLE: &str = "p dgr 4 4\n1 2\n2 3\n3 4\n4 1\n";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn twcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twcount")).args(args).output().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = twcount(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn determinant_of_all_ones() {
    let ws = Workspace::new();
    let m = ws.file("ones3.mat", ONES3);
    let report = json(&["det", "--matrix", arg(&m)]);
    assert_eq!(report["result"], "0");
    assert_eq!(report["command"], "det");
    let text = String::from_utf8(twcount(&["det", "--matrix", arg(&m)]).stdout).unwrap();
    assert!(text.contains("result: 0\n"));
}

#[test]
fn spanning_trees_of_k4() {
    let ws = Workspace::new();
    let g = ws.file("k4.gr", K4);
    assert_eq!(json(&["spanning", "--graph", arg(&g)])["result"], "16");
}

#[test]
fn bowtie_tours_verified() {
    let ws = Workspace::new();
    let g = ws.file("bowtie.gr", BOWTIE);
    let out = twcount(&["euler-undir", "--graph", arg(&g), "--verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result: 2\n"), "{text}");
    assert!(text.contains("verify: MATCH"), "{text}");

    let report = json(&["verify", "euler-undir", "--graph", arg(&g)]);
    assert_eq!(report["result"], "2");
    assert_eq!(report["verify"]["status"], "MATCH");
}

#[test]
fn json_reports_are_deterministic() {
    let ws = Workspace::new();
    let g = ws.file("k4.gr", K4);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    for args in [
        vec!["histogram", "--graph", arg(&g)],
        vec!["spanning", "--graph", arg(&g)],
        vec!["decomp", "--graph", arg(&g)],
    ] {
        let a = strip(json(&args));
        let b = strip(json(&args));
        assert_eq!(a, b);
    }
    let raw = String::from_utf8(twcount(&["histogram", "--graph", arg(&g), "--json"]).stdout).unwrap();
    let positions: Vec<usize> = ["command", "input_sha256", "width", "result", "elapsed_ms"]
        .iter()
        .map(|k| raw.find(&format!("\"{k}\":")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{raw}");
    let report = json(&["histogram", "--graph", arg(&g)]);
    assert_eq!(report["result"], serde_json::json!({"1": "6", "2": "3"}));
}

#[test]
fn every_engine_subcommand_matches_its_oracle() {
    let ws = Workspace::new();
    let m = ws.file("ones3.mat", ONES3);
    let k4 = ws.file("k4.gr", K4);
    let dc = ws.file("dcycle.gr", DCYCLE);
    let cases: Vec<(Vec<&str>, Value)> = vec![
        (vec!["det", "--matrix", arg(&m)], "0".into()),
        (vec!["charpoly", "--matrix", arg(&m)], serde_json::json!(["0", "0", "-3", "1"])),
        (vec!["trace", "--matrix", arg(&m), "--k", "3"], "27".into()),
        (vec!["histogram", "--matrix", arg(&m)], serde_json::json!({"1": "2", "2": "3", "3": "1"})),
        (vec!["histogram", "--graph", arg(&dc)], serde_json::json!({"1": "1"})),
        (vec!["spanning", "--graph", arg(&k4)], "16".into()),
        (vec!["arborescences", "--graph", arg(&dc), "--root", "2"], "1".into()),
        (vec!["euler-dir", "--graph", arg(&dc)], "1".into()),
        (vec!["euler-undir", "--graph", arg(&k4)], "0".into()),
    ];
    for (mut args, want) in cases {
        args.push("--verify");
        let report = json(&args);
        assert_eq!(report["result"], want, "{args:?}");
        assert_eq!(report["verify"]["status"], "MATCH", "{args:?}");
    }
}

#[test]
fn decompositions_round_trip_through_files() {
    let ws = Workspace::new();
    let g = ws.file("bowtie.gr", BOWTIE);
    let td = ws.dir.path().join("bowtie.td");
    let out = twcount(&["decomp", "--graph", arg(&g), "--out", arg(&td)]);
    assert!(out.status.success());
    assert_eq!(json(&["validate", "--graph", arg(&g), "--td", arg(&td)])["result"], "2");
    assert_eq!(json(&["spanning", "--graph", arg(&g), "--td", arg(&td)])["result"], "9");
}

#[test]
fn gadget_is_written_and_checked() {
    let ws = Workspace::new();
    let out = ws.dir.path().join("gadget.dgr");
    let report = json(&["gadget-ord", "--n", "7", "--s", "5", "--t", "3", "--out", arg(&out), "--verify"]);
    assert_eq!(report["verify"]["status"], "MATCH");
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("p dgr 7 "));

    let literal = twcount(&["gadget-ord", "--n", "6", "--s", "3", "--t", "4", "--variant", "literal", "--verify"]);
    assert_eq!(literal.status.code(), Some(1));
    assert!(String::from_utf8(literal.stdout).unwrap().contains("MISMATCH"));
}

#[test]
fn exit_codes() {
    let ws = Workspace::new();
    let m = ws.file("ones3.mat", ONES3);
    let bad = ws.file("bad.mat", "2\n1 2\n3\n");
    let k4 = ws.file("k4.gr", K4);

    let missing = twcount(&["det", "--matrix", "/nonexistent/file.mat"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(twcount(&["det", "--matrix", arg(&bad)]).status.code(), Some(2));
    assert_eq!(twcount(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(twcount(&["euler-dir", "--graph", arg(&k4)]).status.code(), Some(2));

    let capped = twcount(&["det", "--matrix", arg(&m), "--max-width", "1"]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8(capped.stderr).unwrap().contains("WidthLimitExceeded"));

    let endpoints = twcount(&["gadget-ord", "--n", "6", "--s", "1", "--t", "3"]);
    assert_eq!(endpoints.status.code(), Some(1));
    assert!(String::from_utf8(endpoints.stderr).unwrap().contains("InvalidEndpoints"));

    assert_eq!(twcount(&["det", "--help"]).status.code(), Some(0));
}
