use std::process::{Command, Output};

use serde_json::Value;

fn chroma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chroma")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn csf_prints_expansion_and_flags() {
    let out = chroma(&["csf", "--uio", "3,4,4", "--basis", "e"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["coefficients"], serde_json::json!({"2,1": 1, "3": 3}));
    assert_eq!(v["ePositive"], true);
    assert_eq!(v["uio"], "3,4,4");

    let out = chroma(&["csf", "--uio", "3,3", "--basis", "m", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "partition,coefficient\n\"1,1\",2\n");
}

#[test]
fn verify_examples_pass() {
    for args in [
        ["verify", "ppos", "--max-n", "4", "--max-k", "4"],
        ["verify", "sink", "--max-n", "4", "--max-graph-n", "4"],
        ["verify", "involutions", "--max-n", "3", "--max-k", "3"],
    ] {
        let out = chroma(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = json(&out);
        assert_eq!(v["ok"], true);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(chroma(&["verify", "unknown-suite"]).status.code(), Some(2));
    assert_eq!(chroma(&["csf", "--uio", "2,1"]).status.code(), Some(2));
    assert_eq!(chroma(&["scan", "--max-n", "20"]).status.code(), Some(2));
    assert_eq!(chroma(&["verify", "ppos", "--instance", "not json"]).status.code(), Some(2));
}

#[test]
fn failure_payload_replays() {
    // a graph string that cannot be parsed makes the sink check fail
    let forged = r#"{"graph":"n=2;0-7"}"#;
    let out = chroma(&["verify", "sink", "--instance", forged]);
    assert_eq!(out.status.code(), Some(1));
    let failure = json(&out)["failures"][0].clone();
    let replay = failure["instance"].to_string();
    let again = chroma(&["verify", "sink", "--instance", &replay]);
    assert_eq!(again.status.code(), Some(1));
    assert_eq!(json(&again)["failures"][0], failure);
}

#[test]
fn single_instance_filters() {
    let out = chroma(&["verify", "gasharov", "--uio", "3,4,4", "--partition", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["instances"], 1);
    let out = chroma(&["verify", "ppos", "--instance", r#"{"uio":"3,4,5,5","k":5}"#]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_byte_identical_across_worker_counts() {
    let one = chroma(&["verify", "gnechrom", "--max-n", "3", "--format", "csv", "--jobs", "1"]);
    let four = chroma(&["verify", "gnechrom", "--max-n", "3", "--format", "csv", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
    let a = chroma(&["scan", "--max-n", "5", "--jobs", "1", "--format", "csv"]);
    let b = chroma(&["scan", "--max-n", "5", "--jobs", "3", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_counts() {
    let out = chroma(&["scan", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["scanned"], 22);
    assert_eq!(v["negatives"], 0);
    let out = chroma(&["scan", "--family", "pnk", "--max-n", "6", "--max-k", "3"]);
    assert_eq!(json(&out)["negatives"], 0);
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = chroma(&["cache", "rebuild", "--max-degree", "3", "--cache-dir", d]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["written"], 48);
    // rebuilding again changes nothing
    let before = std::fs::read(dir.path().join("transition-s-e-3.json")).unwrap();
    chroma(&["cache", "rebuild", "--max-degree", "3", "--cache-dir", d]);
    assert_eq!(std::fs::read(dir.path().join("transition-s-e-3.json")).unwrap(), before);

    let listed = json(&chroma(&["cache", "list", "--cache-dir", d]));
    assert_eq!(listed["entries"].as_array().unwrap().len(), 48);

    let path = dir.path().join("transition-m-e-3.json");
    let text = std::fs::read_to_string(&path).unwrap().replacen("\"1\"", "\"2\"", 1);
    std::fs::write(&path, text).unwrap();
    let out = chroma(&["cache", "list", "--cache-dir", d]);
    assert_eq!(out.status.code(), Some(1));
    let listed = json(&out);
    let bad: Vec<&Value> = listed["entries"].as_array().unwrap().iter().filter(|e| e["valid"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["degree"], 3);

    // a computation that needs the entry recomputes it and repairs the file
    let out = chroma(&["csf", "--uio", "3,4,4", "--cache-dir", d]);
    assert_eq!(json(&out)["coefficients"], serde_json::json!({"2,1": 1, "3": 3}));
    assert_eq!(chroma(&["cache", "list", "--cache-dir", d]).status.code(), Some(0));

    let out = chroma(&["cache", "clear", "--cache-dir", d]);
    assert_eq!(json(&out)["removed"], 48);
}
