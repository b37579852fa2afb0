//! The `clawham` binary end to end: exit statuses, payloads and files.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn clawham(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clawham"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const OCTAHEDRON: &str = "0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";

#[test]
fn check_reports_each_predicate() {
    let out = clawham(&["check"], OCTAHEDRON);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["claw_free", "locally_connected", "two_connected"] {
        assert_eq!(v[key]["holds"], true, "{key}");
    }
    assert_eq!(v["chordal"]["holds"], false);
    assert_eq!(v["chordal"]["witness"]["kind"], "induced_cycle");

    let claw = clawham(&["check", "-"], "0 1\n0 2\n0 3\n");
    assert_eq!(claw.status.code(), Some(1));
    assert_eq!(json(&claw)["claw_free"]["witness"]["center"], 0);
}

#[test]
fn hamilton_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("oct.txt");
    let cert = dir.path().join("cert.json");
    std::fs::write(&graph, OCTAHEDRON).unwrap();
    let out = clawham(
        &[
            "hamilton",
            graph.to_str().unwrap(),
            "--certificate-out",
            cert.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cycle"].as_array().unwrap().len(), 6);

    let ok = clawham(
        &["verify-certificate", cert.to_str().unwrap(), graph.to_str().unwrap()],
        "",
    );
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["ok"], true);

    // Against a graph missing one of the cycle's edges the replay fails.
    let c6 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    let bad = clawham(&["verify-certificate", cert.to_str().unwrap()], c6);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["ok"], false);

    let refused = clawham(&["hamilton"], c6);
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("locally_connected"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(clawham(&["check"], "0 1 2\n").status.code(), Some(2));
    assert_eq!(clawham(&["check", "/no/such/file"], "").status.code(), Some(2));
    assert_eq!(clawham(&["gen", "hexagon"], "").status.code(), Some(2));
    assert_eq!(
        clawham(&["infinite", "run", "--preset", "nope"], "").status.code(),
        Some(2)
    );
    assert_eq!(clawham(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn infinite_run_writes_log_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let dot = dir.path().join("stable.dot");
    let out = clawham(
        &[
            "infinite",
            "run",
            "--preset",
            "double-ray-square",
            "--rounds",
            "2",
            "--radius",
            "30",
            "--log-out",
            log.to_str().unwrap(),
            "--dot-out",
            dot.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["k"], serde_json::json!([2, 2]));
    assert_eq!(v["extraction"]["all_pass"], true);

    let records: Vec<Value> = std::fs::read_to_string(&log)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0]["round"], 0);
    assert!(records[0]["cycle"].as_array().unwrap().contains(&Value::from(0)));
    assert_eq!(records[2]["decomposition"]["k"], 2);

    let dot = std::fs::read_to_string(&dot).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("bold"));
}

#[test]
fn infinite_run_radius_too_small() {
    let out = clawham(
        &[
            "infinite",
            "run",
            "--preset",
            "ray-square",
            "--radius",
            "10",
            "--rounds",
            "5",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "radius_too_small");
    assert_eq!(v["suggested_radius"], 20);
}

#[test]
fn custom_offsets() {
    let out = clawham(
        &[
            "infinite",
            "run",
            "--preset",
            "custom-oracle",
            "--offsets",
            "1,2",
            "--radius",
            "30",
            "--rounds",
            "2",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["k"], serde_json::json!([2, 2]));
}

#[test]
fn gen_feeds_check() {
    let sq = clawham(
        &["gen", "cycle", "--size", "8", "--power", "2", "--format", "edges"],
        "",
    );
    assert_eq!(sq.status.code(), Some(0));
    let check = clawham(&["check"], &String::from_utf8(sq.stdout).unwrap());
    assert_eq!(check.status.code(), Some(0));

    let line = clawham(&["gen", "cube", "--line", "2"], "");
    let g = json(&line);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 24);

    let ball = clawham(&["gen", "ladder-line-graph", "--radius", "2", "--format", "json"], "");
    assert_eq!(ball.status.code(), Some(0));
    let check = clawham(&["check"], &String::from_utf8(ball.stdout).unwrap());
    assert_eq!(check.status.code(), Some(1));
}
