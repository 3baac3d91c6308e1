//! Black-box tests of the installed binary: exit codes, JSON shape, and
//! determinism of the verification report.

use std::process::{Command, Output};

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gparking"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn every_command_is_reachable() {
    let invocations: &[&[&str]] = &[
        &["ideal", "--complete", "3"],
        &["ideal", "--complete", "3", "--colon", "3"],
        &["ideal", "--complete", "2", "--dual", "2,2"],
        &["skeleton", "--complete", "3", "--k", "1"],
        &["standard", "--complete", "3", "--k", "1", "--count"],
        &["pf", "--complete", "3", "--count"],
        &["pf", "--complete", "3", "--check", "0,1,2"],
        &["spf", "--complete", "3", "--count"],
        &["spf", "--complete", "3", "--check", "1,1,1"],
        &["spf", "--complete", "3", "--reduce", "1,1,1"],
        &["lambda-pf", "--lambda", "2,1", "--count"],
        &["burn", "--complete", "3", "--values", "0,1,2"],
        &["phi", "--complete", "3", "--values", "0,1,2"],
        &["phi-spherical", "--complete", "3", "--values", "1,1,1"],
        &["trees", "--complete", "3", "--count"],
        &["trees", "--bipartite", "2", "2", "1", "1", "--count"],
        &["uprooted", "--n", "4", "--count"],
        &["uprooted", "--n", "4", "--avoid", "1,4", "--count"],
        &["psi", "--tree", "1:3,2:3"],
        &["psi", "--tree", "1:3,2:3", "--inverse"],
        &["steck", "--lambda", "3,2,1"],
        &["dims", "--n", "4", "--k", "1", "--a", "1", "--b", "2"],
        &["betti", "--n", "4", "--k", "1", "--table"],
        &["bipartite", "--m", "2", "--n", "3"],
        &["verify", "--max-n", "2"],
        &["spf", "--complete-ab", "3", "1", "2", "--count"],
        &["spf", "--complete", "4", "--delete", "1", "4", "--count"],
        &["spf", "--complete", "3", "--delete-root-edges", "--count"],
    ];
    for args in invocations {
        let out = run(args, &[]);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let doc = json(&out);
        assert_eq!(doc["command"], args[0], "{args:?}");
        assert!(doc["result"].is_object(), "{args:?}");
    }
}

#[test]
fn counts_are_decimal_strings() {
    let out = run(&["spf", "--complete", "3", "--count"], &[]);
    assert_eq!(json(&out)["result"]["count"], "4");
    let out = run(&["dims", "--n", "5", "--k", "0", "--a", "1", "--b", "1"], &[]);
    assert_eq!(json(&out)["result"]["dims"][0]["dim"], "3125");
}

#[test]
fn flag_errors_exit_two() {
    let out = run(&["spf", "--no-such-flag"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_with_a_code() {
    let out = run(&["phi", "--complete", "2", "--values", "5,5"], &[]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["code"], "not-a-parking-function");

    let out = run(&["spf", "--complete", "3", "--delete", "9", "1"], &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"]["code"].is_string());
}

#[test]
fn graph_files_round_trip() {
    let dir = std::env::temp_dir().join("gparking-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "root": 0, "adjacency": [0,1,0,1, 1,0,1,0, 0,1,0,1, 1,0,1,0]}"#,
    )
    .unwrap();
    let out = run(&["pf", "--graph", path.to_str().unwrap(), "--count"], &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // the 4-cycle has 4 spanning trees
    assert_eq!(json(&out)["result"]["count"], "4");

    let out_path = dir.join("report.json");
    let out = run(
        &["pf", "--graph", path.to_str().unwrap(), "--count", "--out", out_path.to_str().unwrap()],
        &[],
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(written["result"]["count"], "4");
}

#[test]
fn verify_is_deterministic_across_workers() {
    let one = run(&["verify", "--max-n", "3"], &[("GPARKING_WORKERS", "1")]);
    let four = run(&["verify", "--max-n", "3"], &[("GPARKING_WORKERS", "4")]);
    assert!(one.status.success());
    assert_eq!(one.stdout, run(&["verify", "--max-n", "3"], &[("GPARKING_WORKERS", "1")]).stdout);
    let report_one = json(&one)["result"]["report"].as_str().unwrap().to_string();
    let report_four = json(&four)["result"]["report"].as_str().unwrap().to_string();
    assert_eq!(report_one, report_four);
    assert!(report_one.lines().all(|l| {
        l.starts_with("pass ") || l.starts_with("== ") || l.is_empty() || l.ends_with("failed")
    }));
}
