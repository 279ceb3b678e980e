//! End to end tests of the `zf` binary: output formats, stdin support,
//! and the exit code contract (0 ok, 1 usage, 2 infeasible, 4 invalid
//! script).

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::sync::atomic::{AtomicUsize, Ordering};

fn zf() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zf"))
}

fn scratch(name: &str) -> PathBuf {
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let id = COUNTER.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir().join(format!("zf-cli-{}-{id}-{name}", std::process::id()))
}

fn run(args: &[&str]) -> Output {
    zf().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_round_trips_through_every_format() {
    for format in ["edges", "json"] {
        let path = scratch(&format!("gear.{format}"));
        let out = run(&[
            "gen",
            "--family",
            "gear",
            "-m",
            "4",
            "-r",
            "2",
            "--format",
            format,
            "--out",
            path.to_str().expect("utf8 path"),
        ]);
        assert!(out.status.success());
        let report = stdout_json(&run(&["zf", path.to_str().expect("utf8 path")]));
        assert_eq!(report["z"], 3, "gear(4,2) via {format} file");
        std::fs::remove_file(&path).ok();
    }
}

#[test]
fn gen_json_carries_labels_and_index_map() {
    let out = run(&[
        "gen", "--family", "helm", "-m", "3", "-s", "2", "--format", "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 10);
    assert_eq!(v["labels"][0], "center");
    assert_eq!(v["index_map"]["p_3_2"], 9);
}

#[test]
fn graph_argument_reads_stdin() {
    let gen = run(&["gen", "--family", "wheel", "-n", "6"]);
    let mut child = zf()
        .args(["pt", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .expect("piped")
        .write_all(&gen.stdout)
        .expect("write stdin");
    let out = child.wait_with_output().expect("binary exits");
    let v = stdout_json(&out);
    assert_eq!(v["z"], 3);
    assert_eq!(v["pt"], 2);
}

#[test]
fn closure_reports_the_chronology() {
    let graph = scratch("gear31.txt");
    run(&[
        "gen",
        "--family",
        "gear",
        "-m",
        "3",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    let out = run(&["closure", graph.to_str().expect("utf8"), "--blue", "1,5,6"]);
    let v = stdout_json(&out);
    assert_eq!(v["forcing"], true);
    assert_eq!(v["pt"], 2);
    assert_eq!(v["chronology"]["steps"].as_array().expect("steps").len(), 2);
    assert_eq!(v["final"].as_array().expect("final").len(), 7);

    // A stalling set reports pt null and forcing false.
    let out = run(&["closure", graph.to_str().expect("utf8"), "--blue", "0"]);
    let v = stdout_json(&out);
    assert_eq!(v["forcing"], false);
    assert!(v["pt"].is_null());
    std::fs::remove_file(&graph).ok();
}

#[test]
fn script_replay_and_exit_code_4() {
    let graph = scratch("gear31.txt");
    run(&[
        "gen",
        "--family",
        "gear",
        "-m",
        "3",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    let script = scratch("script.json");
    std::fs::write(
        &script,
        r#"{"initial":[0,1,6],"steps":[[{"src":1,"dst":2}],[{"src":6,"dst":5}],[{"src":2,"dst":3}],[{"src":5,"dst":4}]]}"#,
    )
    .expect("write script");
    let out = run(&[
        "closure",
        graph.to_str().expect("utf8"),
        "--script",
        script.to_str().expect("utf8"),
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["forcing"], true);
    assert_eq!(v["completion_time"], 4);

    // Same script with a conflicting --blue is a usage error.
    let out = run(&[
        "closure",
        graph.to_str().expect("utf8"),
        "--script",
        script.to_str().expect("utf8"),
        "--blue",
        "0,2,4",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // A force that is not applicable at its step is an invalid script.
    std::fs::write(
        &script,
        r#"{"initial":[0,1,6],"steps":[[{"src":0,"dst":4}]]}"#,
    )
    .expect("write script");
    let out = run(&[
        "closure",
        graph.to_str().expect("utf8"),
        "--script",
        script.to_str().expect("utf8"),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not applicable"));

    // So is malformed JSON.
    std::fs::write(&script, "not a script").expect("write script");
    let out = run(&[
        "closure",
        graph.to_str().expect("utf8"),
        "--script",
        script.to_str().expect("utf8"),
    ]);
    assert_eq!(out.status.code(), Some(4));
    std::fs::remove_file(&graph).ok();
    std::fs::remove_file(&script).ok();
}

#[test]
fn usage_errors_exit_1() {
    // Unknown flag.
    assert_eq!(run(&["zf", "--bogus"]).status.code(), Some(1));
    // Family parameter mismatch.
    assert_eq!(
        run(&["gen", "--family", "path", "-m", "4"]).status.code(),
        Some(1)
    );
    // Missing required parameter.
    assert_eq!(run(&["gen", "--family", "gear"]).status.code(), Some(1));
    // Missing file.
    assert_eq!(
        run(&["zf", "/nonexistent/graph.txt"]).status.code(),
        Some(1)
    );
    // Blue vertex out of range.
    let graph = scratch("p4.txt");
    run(&[
        "gen",
        "--family",
        "path",
        "-n",
        "4",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    assert_eq!(
        run(&["closure", graph.to_str().expect("utf8"), "--blue", "9"])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_file(&graph).ok();
}

#[test]
fn infeasible_path_cover_exits_2() {
    let graph = scratch("big.txt");
    run(&[
        "gen",
        "--family",
        "helm",
        "-m",
        "5",
        "-s",
        "3",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    let out = run(&["pathcover", graph.to_str().expect("utf8")]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&graph).ok();
}

#[test]
fn search_flags_flow_through() {
    let graph = scratch("helm5.txt");
    run(&[
        "gen",
        "--family",
        "helm",
        "-m",
        "5",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    let out = zf()
        .args([
            "pt",
            graph.to_str().expect("utf8"),
            "--all-witnesses",
            "--prove-minimality",
            "--pendant-bound",
            "--workers",
            "2",
        ])
        .env("ZF_WORKERS", "7")
        .output()
        .expect("binary runs");
    let v = stdout_json(&out);
    assert_eq!(v["z"], 3);
    assert_eq!(v["pt"], 4);
    assert!(v["witnesses"].as_array().expect("witnesses").len() > 1);
    assert_eq!(v["minimality"]["forcing_sets_found"], 0);
    std::fs::remove_file(&graph).ok();
}

#[test]
fn verify_reports_matches_and_exits_0() {
    let out = run(&[
        "verify",
        "--suite",
        "gear",
        "--m-range",
        "3..4",
        "--r-range",
        "1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON");
    let cases = v.as_array().expect("array of cases");
    assert_eq!(cases.len(), 2);
    assert!(cases.iter().all(|c| c["status"] == "match"));
    // The human readable table goes to stderr.
    let table = String::from_utf8_lossy(&out.stderr);
    assert!(table.contains("gear(3,1)") && table.contains("match"));
}

#[test]
fn verify_ghelm_suite_matches() {
    let out = run(&[
        "verify",
        "--suite",
        "ghelm",
        "--m-range",
        "3",
        "--s-range",
        "2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON");
    assert_eq!(v[0]["family"], "generalized_helm");
    assert_eq!(v[0]["status"], "match");
}

#[test]
fn verify_over_budget_exits_2() {
    // gear(8,3) has 33 vertices, over the 30 vertex budget; the case is
    // reported as exceeded, not failed, and the run exits 2.
    let out = run(&[
        "verify",
        "--suite",
        "gear",
        "--m-range",
        "8",
        "--r-range",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON");
    assert_eq!(v[0]["status"], "budget_exceeded");
    assert!(v[0]["computed"].is_null());
}

#[test]
fn export_dot_marks_blue_and_chains() {
    let graph = scratch("gear31.txt");
    run(&[
        "gen",
        "--family",
        "gear",
        "-m",
        "3",
        "--out",
        graph.to_str().expect("utf8"),
    ]);
    let out = run(&[
        "export-dot",
        graph.to_str().expect("utf8"),
        "--blue",
        "1,5,6",
    ]);
    assert!(out.status.success());
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.starts_with("graph zf {"));
    assert!(dot.contains("style=filled"));
    assert!(dot.contains("penwidth"));

    // DOT is also available straight from gen.
    let out = run(&["gen", "--family", "cycle", "-n", "5", "--format", "dot"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 -- 1"));
    std::fs::remove_file(&graph).ok();
}
