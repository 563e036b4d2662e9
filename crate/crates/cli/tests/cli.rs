use std::process::{Command, Output};

fn howe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_howe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

const I1: [&str; 6] = ["--field", "p=31", "--alpha", "0,1,-1,20", "--beta", "28,16,7,27"];

#[test]
fn build_first_example() {
    let out = howe(&[&["build"][..], &I1, &["--json"]].concat());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["singularity"]["label"], "I-1");
    assert_eq!(v["singularity"]["resultants"]["Res(h1, h1')"], "27");
    let expected = [
        ("c60", "16"),
        ("c50", "22"),
        ("c42", "27"),
        ("c40", "23"),
        ("c32", "10"),
        ("c30", "13"),
        ("c22", "14"),
        ("c20", "16"),
        ("c12", "29"),
        ("c10", "10"),
        ("c04", "1"),
        ("c02", "9"),
        ("c00", "28"),
    ];
    for (name, value) in expected {
        assert_eq!(v["coefficients"][name], value, "{name}");
    }
    let points: Vec<&str> = v["singular_points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["coordinates"].as_str().unwrap())
        .collect();
    assert_eq!(points, vec!["(4:0:1)", "(12:0:1)", "(24:0:1)", "(0:1:0)"]);
    assert_eq!(v["irreducibility"]["irreducible"], true);
    assert!(v.get("timing").is_none());
}

#[test]
fn build_is_byte_identical_across_runs() {
    let args = [&["build"][..], &I1, &["--json", "--seed", "5"]].concat();
    assert_eq!(howe(&args).stdout, howe(&args).stdout);
}

#[test]
fn build_timing_is_opt_in() {
    let out = howe(&[&["build"][..], &I1, &["--json", "--timing"]].concat());
    assert!(json(&out)["timing"]["total_ms"].is_number());
}

#[test]
fn build_last_example_text() {
    let out = howe(&[
        "build",
        "--field",
        "p=31",
        "--alpha",
        "0,1,-1,2",
        "--beta",
        "8,20,24,12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("type II-4: (m, n) = (0, 2), 2 singular points"), "{text}");
}

#[test]
fn build_over_rationals() {
    let out = howe(&[
        "build",
        "--field",
        "rational",
        "--alpha",
        "0,1,-1,1/2",
        "--beta",
        "3,-4,5,7",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["input"]["field"], "Q");
    assert_eq!(v["coefficients"]["c42"], "-4");
}

#[test]
fn duplicate_point_exits_3() {
    let out = howe(&["build", "--field", "p=31", "--alpha", "0,1,1,2", "--beta", "8,20,24,12"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("alpha2") && err.contains("alpha3"), "{err}");
}

#[test]
fn negative_reduces_mod_p() {
    // -1 and 30 are the same element of F_31
    let out = howe(&[
        "build",
        "--field",
        "p=31",
        "--alpha",
        "0,1,30,2",
        "--beta",
        "8,20,24,-1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_field_exits_2() {
    for field in ["p=32", "p=2", "banana"] {
        let out = howe(&["build", "--field", field, "--alpha", "0,1,2,3", "--beta", "4,5,6,7"]);
        assert_eq!(out.status.code(), Some(2), "{field}");
    }
    assert_eq!(
        howe(&["sample", "--field", "p=33", "--count", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_paper_passes() {
    let out = howe(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("7/7 examples reproduced"));
    let v = json(&howe(&["verify-paper", "--json"]));
    assert_eq!(v["passed"], 7);
}

#[test]
fn verify_paper_reports_corruption() {
    let table = howe_sextic::reference::reference_examples();
    let mut value = serde_json::to_value(&table).unwrap();
    value[2]["coefficients"]["c10"] = 16.into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    std::fs::write(&path, serde_json::to_string(&value).unwrap()).unwrap();
    let out = howe(&["verify-paper", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("I-3: MISMATCH"), "{text}");
    assert!(text.contains("c10: expected 16, got 15"), "{text}");
    assert!(text.contains("6/7 examples reproduced"));
}

#[test]
fn sample_counts() {
    let out = howe(&["sample", "--field", "p=31", "--count", "1000", "--seed", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["irreducibility_failures"], 0);
    let totals = v["totals"].as_object().unwrap();
    assert!(totals.keys().all(|k| ["2", "3", "4"].contains(&k.as_str())));
    assert_eq!(totals.values().map(|n| n.as_u64().unwrap()).sum::<u64>(), 1000);

    let empty = json(&howe(&["sample", "--field", "p=31", "--count", "0", "--json"]));
    assert_eq!(empty["count"], 0);
    assert!(empty["totals"].as_object().unwrap().is_empty());
}

#[test]
fn scan_agrees() {
    let v = json(&howe(&[&["scan"][..], &I1, &["--json"]].concat()));
    assert_eq!(v["agree"], true);
    assert_eq!(v["scan"].as_array().unwrap().len(), 4);
    let v = json(&howe(&[
        "scan",
        "--field",
        "p=31",
        "--alpha",
        "0,1,-1,5",
        "--beta",
        "2,10,26,29",
        "--json",
    ]));
    assert_eq!(v["agree"], true);
    let points: Vec<&str> = v["scan"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_str().unwrap())
        .collect();
    assert_eq!(points, vec!["(0:1:0)", "(1:0:0)", "(25:0:1)"]);
    let v = json(&howe(&[
        "scan",
        "--field",
        "p=97",
        "--alpha",
        "3,14,15,92",
        "--beta",
        "65,35,89,79",
        "--json",
    ]));
    assert_eq!(v["agree"], true);
    assert_eq!(v["no_offaxis_singularities"], true);
}

#[test]
fn scan_budget_exits_4() {
    let out = howe(&[&["scan"][..], &I1, &["--budget", "500"]].concat());
    assert_eq!(out.status.code(), Some(4));
}
