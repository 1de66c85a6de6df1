use std::process::Command;

use catwood::cli::run;
use catwood_core::DyckPath;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_catwood"))
}

fn run_in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("catwood").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn order_prints_true() {
    let out = bin()
        .args(["order", "--lattice", "tamari", "NSNS", "NNSS"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "true");
    let (code, stdout, _) = run_in_process(&["order", "--lattice", "kreweras", "NNSS", "NSNS"]);
    assert_eq!((code, stdout.trim()), (0, "false"));
}

#[test]
fn invalid_word_is_a_domain_error() {
    let out = bin().args(["phi", "NSSN", "NS"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let (code, _, _) = run_in_process(&["phi", "NNSS", "NSNS"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_in_process(&["order", "--lattice", "stanley", "NS", "NSNS"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run_in_process(&["frobnicate"]).0, 1);
    assert_eq!(
        run_in_process(&["order", "--lattice", "dyck", "NS", "NS"]).0,
        1
    );
    assert_eq!(run_in_process(&["census"]).0, 1);
    let (code, out, _) = run_in_process(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("census"));
}

#[test]
fn census_three() {
    let out = bin().args(["census", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["intervals"]["stanley"]["enumerated"], 14);
    assert_eq!(report["intervals"]["tamari"]["enumerated"], 13);
    assert_eq!(report["intervals"]["kreweras"]["enumerated"], 12);
    assert_eq!(report["triangulations"]["distinct"], 13);
    assert_eq!(report["triangulations"]["distinct_stack"], 12);
    assert_eq!(report["pass"], true);
}

#[test]
fn census_caps_and_shards() {
    assert_eq!(run_in_process(&["census", "8"]).0, 1);
    assert_eq!(run_in_process(&["census", "0"]).0, 1);
    let (code, one, _) = run_in_process(&["census", "4"]);
    assert_eq!(code, 0);
    let (code, four, _) = run_in_process(&["census", "4", "--shards", "4"]);
    assert_eq!(code, 0);
    assert_eq!(one, four);
    let (code, out, err) = run_in_process(&["census", "5", "--count-only", "--cap", "10"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["intervals"]["stanley"]["enumerated"], 594);
    assert!(report.get("realizers").is_none());
}

#[test]
fn covers_lists_paths() {
    let (code, out, _) = run_in_process(&["covers", "--lattice", "stanley", "NSNS"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), vec!["NNSS"]);
}

#[test]
fn convert_round_trips() {
    for n in 1..=6 {
        for p in DyckPath::all(n) {
            let w = p.to_word();
            for form in ["tree", "binary", "partition"] {
                let (code, there, _) =
                    run_in_process(&["convert", "--from", "word", "--to", form, &w]);
                assert_eq!(code, 0);
                let (code, back, _) =
                    run_in_process(&["convert", "--from", form, "--to", "word", there.trim()]);
                assert_eq!(code, 0);
                assert_eq!(back.trim(), w, "{form}");
            }
        }
    }
    let (code, out, _) = run_in_process(&[
        "convert",
        "--from",
        "partition",
        "--to",
        "word",
        "[[1,3],[2]]",
    ]);
    assert_eq!((code, out.trim()), (0, "NNSNSS"));
    assert_eq!(
        run_in_process(&[
            "convert",
            "--from",
            "partition",
            "--to",
            "word",
            "[[1,3],[2,4]]"
        ])
        .0,
        1
    );
}

#[test]
fn realizer_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, json, _) = run_in_process(&["phi", "NSNSNS", "NNSNSS", "--json"]);
    assert_eq!(code, 0);
    std::fs::write(&path, &json).unwrap();
    let file = path.to_str().unwrap();

    let (code, out, _) = run_in_process(&["psi", "--json", file]);
    assert_eq!(code, 0);
    let pq: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (pq["p"].as_str(), pq["q"].as_str()),
        (Some("NSNSNS"), Some("NNSNSS"))
    );

    let (code, out, _) = run_in_process(&["classify", "--json", file]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["min_and_max"], v["stack"]);
    assert_eq!(v["minimal"], true);

    let mut tampered: Value = serde_json::from_str(&json).unwrap();
    tampered["p1"][0] = Value::from(-3);
    std::fs::write(&path, tampered.to_string()).unwrap();
    assert_eq!(run_in_process(&["psi", "--json", file]).0, 1);
    assert_eq!(
        run_in_process(&["psi", "--json", "/nonexistent/r.json"]).0,
        1
    );
}

#[test]
fn dot_outputs() {
    let (code, out, _) = run_in_process(&["phi", "NSNS", "NNSS", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph realizer"));
    assert_eq!(out.matches("style=dashed").count(), 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.dot");
    let (code, _, _) = run_in_process(&[
        "export-hasse",
        "--lattice",
        "kreweras",
        "3",
        "--dot",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(path).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(
        run_in_process(&["export-hasse", "--lattice", "tamari", "3"]).0,
        1
    );
}

#[test]
fn phi_text_output() {
    let (code, out, _) = run_in_process(&["phi", "NS", "NS"]);
    assert_eq!(code, 0);
    assert_eq!(out, "p0: v0\np1: v1\np2: v2\n");
}
