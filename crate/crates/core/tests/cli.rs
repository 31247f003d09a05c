use std::process::Command;

use dsfusion::builtin_takraw_scenario;
use dsfusion::cli::{self, report::sig12, EXIT_CONFLICT, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["dsfusion"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn fuse_trace_table() {
    let (code, out, _) = run(&[
        "fuse",
        "--builtin",
        "takraw",
        "--condition",
        "1",
        "--trace",
        "--format",
        "table",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("\ncombination ").count(), 9);
    assert_eq!(out.matches("k = ").count(), 9);
    assert!(out.contains("winner: B (back)"), "{out}");
    assert!(out.contains("{F} 0.5625"));
}

#[test]
fn fuse_without_trace_has_no_tables() {
    let (code, out, _) = run(&[
        "fuse",
        "--builtin",
        "takraw",
        "--condition",
        "9",
        "--precision",
        "2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.contains("combination"));
    assert!(out.contains("winner: B (back)  mass 0.55"), "{out}");
}

#[test]
fn fuse_json_carries_full_precision() {
    let (code, out, _) = run(&[
        "fuse",
        "--builtin",
        "takraw",
        "--condition",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let (report, p) = builtin_takraw_scenario().predict_traced(1).unwrap();
    assert_eq!(v["condition"], 1);
    assert_eq!(v["scenario"], "takraw");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 9);
    for (json, trace) in steps.iter().zip(&report.steps) {
        assert_eq!(json["k"].as_f64().unwrap(), trace.conflict_k);
        let cells = json["cells"].as_array().unwrap();
        assert_eq!(cells.len(), trace.cells.len());
        for (jc, c) in cells.iter().zip(&trace.cells) {
            assert_eq!(jc["product"].as_f64().unwrap(), c.product);
            assert_eq!(jc["left"], serde_json::json!(c.left.labels()));
            assert_eq!(
                jc["intersection"],
                serde_json::json!(c.intersection.labels())
            );
        }
    }
    for (s, m) in p.final_mass.focal_elements() {
        assert_eq!(v["final"][s.key()].as_f64().unwrap(), m);
    }
    assert!(v["final"].get("").is_none());
    assert_eq!(
        v["final"]["L+B"].as_f64().unwrap(),
        p.final_mass.mass_of_mask(0b1010)
    );
    assert_eq!(v["winner"]["labels"], serde_json::json!(["B"]));
    assert_eq!(v["winner"]["mass"].as_f64().unwrap(), p.winner_mass);
    assert_eq!(v["winner"]["belief"].as_f64().unwrap(), p.winner_belief);
    assert_eq!(
        v["winner"]["plausibility"].as_f64().unwrap(),
        p.winner_plausibility
    );
}

#[test]
fn sweep_csv_matches_predictions() {
    let (code, out, _) = run(&["sweep", "--builtin", "takraw", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "condition,winner,winner_mass,winner_belief,winner_plausibility"
    );
    assert_eq!(lines.len(), 10);
    let s = builtin_takraw_scenario();
    for (line, c) in lines[1..].iter().zip(1..) {
        let p = s.predict(c).unwrap();
        let expected = format!(
            "{c},{},{},{},{}",
            p.winner.key(),
            sig12(p.winner_mass),
            sig12(p.winner_belief),
            sig12(p.winner_plausibility)
        );
        assert_eq!(*line, expected);
        let mass: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!((mass - p.winner_mass).abs() <= 1e-12 * p.winner_mass);
    }
}

#[test]
fn sweep_table_and_json() {
    let (code, out, _) = run(&["sweep", "--builtin", "takraw"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 10);
    let (code, out, _) = run(&["sweep", "--builtin", "takraw", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["conditions"].as_array().unwrap().len(), 9);
    assert_eq!(
        v["conditions"][0]["step_conflicts"]
            .as_array()
            .unwrap()
            .len(),
        9
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["fuse", "--builtin", "takraw", "--condition", "3", "--trace"][..],
        &[
            "fuse",
            "--builtin",
            "takraw",
            "--condition",
            "3",
            "--format",
            "json",
        ],
        &["sweep", "--builtin", "takraw", "--format", "csv"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn fuse_csv_lists_final_masses() {
    let (code, out, _) = run(&[
        "fuse",
        "--builtin",
        "takraw",
        "--condition",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "set,mass,belief,plausibility");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("F,0.151030482484,"));
}

#[test]
fn export_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("takraw.json");
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run(&["export-builtin", "takraw", "--out", path_str]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let a = run(&["sweep", "--scenario", path_str, "--format", "json"]);
    let b = run(&["sweep", "--builtin", "takraw", "--format", "json"]);
    assert_eq!(a, b);

    let (code, out, _) = run(&["export-builtin", "takraw", "--out", "-"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn usage_errors() {
    let (code, out, err) = run(&["fuse", "--scenario", "missing.file", "--condition", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("missing.file"));

    assert_eq!(run(&["fuse", "--builtin", "takraw"]).0, EXIT_USAGE);
    assert_eq!(run(&["fuse", "--condition", "1"]).0, EXIT_USAGE);
    assert_eq!(
        run(&[
            "fuse",
            "--builtin",
            "takraw",
            "--scenario",
            "x",
            "--condition",
            "1"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        run(&[
            "fuse",
            "--builtin",
            "takraw",
            "--condition",
            "1",
            "--precision",
            "13"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(run(&["sweep", "--builtin", "other"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sweep"));
}

#[test]
fn validation_errors() {
    let (code, out, _) = run(&["fuse", "--builtin", "takraw", "--condition", "99"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(out.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"frame": ["a", "b"], "sources": [{"name": "s", "focal": ["a"], "bpa": [1.5]}]}"#,
    )
    .unwrap();
    let (code, out, err) = run(&["sweep", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(out.is_empty());
    assert!(err.contains("validation"), "{err}");

    std::fs::write(&path, "{ not json").unwrap();
    let (code, _, err) = run(&["sweep", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn total_conflict_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conflict.json");
    // condition 1 is fine, condition 2 is categorical a vs categorical b
    std::fs::write(
        &path,
        r#"{"frame": ["a", "b"], "sources": [
            {"name": "s", "focal": ["a"], "bpa": [0.5, 1.0]},
            {"name": "t", "focal": ["b"], "bpa": [0.5, 1.0]}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, out, err) = run(&["fuse", "--scenario", p, "--condition", "2"]);
    assert_eq!(code, EXIT_CONFLICT);
    assert!(out.is_empty());
    assert!(err.contains("total conflict"));

    assert_eq!(
        run(&["fuse", "--scenario", p, "--condition", "1"]).0,
        EXIT_OK
    );

    let (code, out, err) = run(&["sweep", "--scenario", p, "--format", "csv"]);
    assert_eq!(code, EXIT_CONFLICT);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(err.contains("condition 2"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dsfusion");
    let missing = Command::new(bin)
        .args(["fuse", "--scenario", "missing.file", "--condition", "1"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));
    assert!(missing.stdout.is_empty());

    let ok = Command::new(bin)
        .args(["sweep", "--builtin", "takraw", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap().lines().count(), 10);
}
