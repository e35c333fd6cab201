use std::path::PathBuf;
use std::process::Command;

use mintrans_core::census::mt_census;
use mintrans_core::cli::report::parse_census_lines;
use mintrans_core::cli::report::CensusRecord;
use mintrans_core::cli::{run_captured, EXIT_BOUND, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("mintrans").chain(args.iter().copied()))
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn mt_check_on_cyclic_four() {
    let (code, out, _) = run(&["mt-check", &data("c4.grp")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("minimally transitive: yes"));

    let (code, out, _) = run(&["--json", "mt-check", &data("c4.grp"), "--stabilizer", "A"]);
    assert_eq!(code, EXIT_OK);
    let record = &json_lines(&out)[0];
    assert_eq!(record["kind"], "mt_check");
    assert_eq!(record["index"], 2);
    assert_eq!(record["holds"], true);
}

#[test]
fn mt_check_reports_a_witness() {
    let (code, out, _) = run(&["mt-check", &data("s3.grp"), "--stabilizer", "C2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("mt-stabilizer C2: no"));
    assert!(out.contains("witness: order 3"));
    let (_, out, _) = run(&["mt-check", &data("s3.grp")]);
    assert!(out.contains("minimally transitive: no"));
}

#[test]
fn census_of_degree_three() {
    let (code, out, _) = run(&["census", "--degree", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("degree 3: 1 class"));
    assert!(out.contains("(1 2 3)"));
}

#[test]
fn census_json_round_trips() {
    let (code, out, _) = run(&["--json", "census", "--degree", "6"]);
    assert_eq!(code, EXIT_OK);
    let parsed = parse_census_lines(&out).unwrap();
    let direct: Vec<CensusRecord> = mt_census(6).unwrap().iter().map(Into::into).collect();
    assert_eq!(parsed, direct);
    let again: String = parsed
        .iter()
        .map(|r| serde_json::to_string(r).unwrap() + "\n")
        .collect();
    assert_eq!(again, out);
}

#[test]
fn census_outside_the_bound() {
    let (code, _, err) = run(&["census", "--degree", "11"]);
    assert_eq!(code, EXIT_BOUND);
    assert!(err.contains("bound"));
}

#[test]
fn verify_small_catalog() {
    let (code, out, _) = run(&["verify", "--max-order", "24"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("violations 0"));
    let (code, out, _) = run(&["--json", "verify", "--max-order", "24"]);
    assert_eq!(code, EXIT_OK);
    let lines = json_lines(&out);
    let summary = lines.last().unwrap();
    assert_eq!(summary["kind"], "verify_summary");
    assert_eq!(summary["total_violations"], 0);
    for suite in &lines[..lines.len() - 1] {
        assert_eq!(suite["kind"], "suite");
        assert_eq!(suite["violations"], 0);
    }
}

#[test]
fn analyze_and_reduce() {
    let (code, out, _) = run(&["analyze", &data("s4.grp")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("subgroups 30"));
    assert!(out.contains("Sylow 3: order 3, 4 conjugate(s)"));

    let (code, out, _) = run(&["--json", "reduce", &data("s4.grp"), "--stabilizer", "A"]);
    assert_eq!(code, EXIT_OK);
    let trace = &json_lines(&out)[0];
    assert_eq!(trace["kind"], "reduction_trace");
    assert_eq!(trace["terminal"], "suprunenko_kopylova");
    assert_eq!(trace["steps"][0]["rule"], "fitting_step");

    for mode in ["split", "squarefree"] {
        let (code, out, _) = run(&[
            "--json",
            "reduce",
            &data("s3_regular.grp"),
            "--stabilizer",
            "Trivial",
            "--mode",
            mode,
        ]);
        assert_eq!(code, EXIT_OK, "{mode}");
        assert_eq!(json_lines(&out)[0]["holds"], true);
    }
}

#[test]
fn classify_degree_fifteen_files() {
    let expected = [
        ("c15.grp", "cyclic_pq"),
        ("c5sq_c3.grp", "P_normal_minimal_nonabelian"),
        ("c3p4_c5.grp", "Q_normal_minimal_nonabelian"),
    ];
    for (file, case) in expected {
        let (code, out, _) = run(&["--json", "classify-pq", &data(file)]);
        assert_eq!(code, EXIT_OK, "{file}");
        let record = &json_lines(&out)[0];
        assert_eq!(record["kind"], "sk_classification");
        assert_eq!(record["case"], case);
    }
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(run(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["mt-check", "/nonexistent/file.grp"]).0, EXIT_USAGE);
    assert_eq!(
        run(&["mt-check", &data("c4.grp"), "--stabilizer", "Missing"]).0,
        EXIT_USAGE
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grp");
    std::fs::write(&bad, "degree 3\ngen (1 4)\n").unwrap();
    let (code, _, err) = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"));
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_mintrans");
    let status = Command::new(bin)
        .args(["mt-check", &data("c4.grp")])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_OK));
    let status = Command::new(bin)
        .args(["census", "--degree", "12"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_BOUND));
    let status = Command::new(bin).arg("--no-such-flag").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
}

#[test]
fn order_cap_from_environment() {
    let bin = env!("CARGO_BIN_EXE_mintrans");
    let output = Command::new(bin)
        .env("MINTRANS_MAX_ORDER", "10")
        .args(["analyze", &data("s4.grp")])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_BOUND));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "verify", "--max-order", "12"];
    assert_eq!(run(&args), run(&args));
}
