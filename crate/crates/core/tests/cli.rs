mod common;

use std::fs;

use common::{virial, virial_env};
use serde_json::Value;

#[test]
fn lambertw_values_and_errors() {
    let out = virial(&["lambertw", "2.718281828459045"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.text(), "1.0\n");
    assert_eq!(virial(&["lambertw", "1e-8"]).code, 0);
    let neg = virial(&["lambertw", "-0.1"]);
    assert_eq!(neg.code, 1);
    assert!(neg.stderr.contains("domain"));
    assert_eq!(virial(&["lambertw", "abc"]).code, 1);
}

#[test]
fn unknown_flags_are_fatal() {
    for args in [
        &["bound", "general", "--a", "1", "--b", "1", "--gamma", "2"][..],
        &[
            "compare",
            "--betaB-min",
            "0",
            "--betaB-max",
            "1",
            "--steps",
            "3",
            "--x",
        ],
        &["frobnicate"],
    ] {
        let out = virial(args);
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn help_documents_flags() {
    let out = virial(&["bound", "pu", "--help"]);
    assert_eq!(out.code, 0);
    let text = out.text();
    for flag in ["--beta", "--B", "--betaB", "--R"] {
        assert!(text.contains(flag), "{flag} missing from help");
    }
    let out = virial(&["sweep", "--help"]);
    for flag in [
        "--min",
        "--max",
        "--steps",
        "--outputs",
        "--format",
        "--out",
        "--svg",
    ] {
        assert!(out.text().contains(flag), "{flag} missing from help");
    }
}

#[test]
fn bound_general_json() {
    let out = virial(&["bound", "general", "--a", "1", "--b", "1", "--beta", "1"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["mu", "w", "radius_lower", "coeff_base", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let w = v["w"].as_f64().unwrap();
    assert!((w - 0.685_076_942_154_593_95).abs() < 1e-14);
    assert_eq!(
        virial(&["bound", "general", "--a", "0", "--b", "1"]).code,
        1
    );
}

#[test]
fn mp_f_reports_closed_form() {
    let out = virial(&["bound", "mp-F", "--u", "10"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let (f, closed) = (v["F"].as_f64().unwrap(), v["closed_form"].as_f64().unwrap());
    assert!((f - closed).abs() <= 1e-8 * closed);
}

#[test]
fn tempered_reads_potential_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sw.json");
    fs::write(
        &path,
        r#"{"dim":3, "core_radius":1.0, "tail":{"type":"square_well","epsilon":1.0,"lambda":1.5}, "B":1.0}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = virial(&["tempered", "--potential", p, "--beta", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["C"].as_f64().unwrap() - 21.282_905_173_551_675).abs() < 1e-8);
    assert!((v["R"].as_f64().unwrap() - 14.137_166_941_154_07).abs() < 1e-8);
    let surface = virial(&[
        "tempered",
        "--potential",
        p,
        "--beta",
        "1",
        "--B-convention",
        "surface",
    ]);
    assert_ne!(surface.stdout, out.stdout);
    assert_eq!(
        virial(&[
            "tempered",
            "--potential",
            p,
            "--beta",
            "1",
            "--B-convention",
            "disc"
        ])
        .code,
        1
    );

    fs::write(&path, r#"{"dim":3, "core_radius":1.0, "colour":"red"}"#).unwrap();
    assert_eq!(
        virial(&["tempered", "--potential", p, "--beta", "1"]).code,
        1
    );
}

#[test]
fn compare_header_and_rows() {
    let out = virial(&[
        "compare",
        "--betaB-min",
        "0",
        "--betaB-max",
        "5",
        "--steps",
        "101",
    ]);
    let text = out.text();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 102);
    assert_eq!(lines[0], "betaB,r1,r2,r1_over_r2,f1,f2,f1_over_f2");
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[1], first[2]);
    assert_eq!(first[3], "1.0");
}

#[test]
fn sweep_files_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("q.csv");
    let svg = dir.path().join("q.svg");
    let out = virial(&[
        "sweep",
        "--min",
        "0",
        "--max",
        "20",
        "--steps",
        "50",
        "--outputs",
        "quotients",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("betaB,r1_over_r2,f1_over_f2\n"));
    let chart = fs::read_to_string(&svg).unwrap();
    assert_eq!(chart.matches("<polyline").count(), 2);

    let json = virial(&[
        "sweep",
        "--min",
        "0",
        "--max",
        "1",
        "--steps",
        "2",
        "--outputs",
        "f1",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["betaB"].as_array().unwrap().len(), 2);

    assert_eq!(
        virial(&[
            "sweep",
            "--min",
            "0",
            "--max",
            "1",
            "--steps",
            "2",
            "--outputs",
            ""
        ])
        .code,
        1
    );
    assert_eq!(
        virial(&[
            "sweep",
            "--min",
            "0",
            "--max",
            "1",
            "--steps",
            "2",
            "--outputs",
            "r1",
            "--format",
            "xml"
        ])
        .code,
        1
    );
}

#[test]
fn series_revert_and_compose() {
    let dir = tempfile::tempdir().unwrap();
    let inp = dir.path().join("s.txt");
    // s e^{-s} to order 4
    fs::write(&inp, "0 0\n1 1\n2 -1\n3 1/2\n4 -1/6\n").unwrap();
    let out = virial(&[
        "series",
        "revert",
        "--in",
        inp.to_str().unwrap(),
        "--order",
        "4",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.text(), "0 0/1\n1 1/1\n2 1/1\n3 3/2\n4 8/3\n");

    let tree = dir.path().join("t.txt");
    fs::write(&tree, out.stdout).unwrap();
    let id = virial(&[
        "series",
        "compose",
        "--outer",
        tree.to_str().unwrap(),
        "--inner",
        inp.to_str().unwrap(),
    ]);
    assert_eq!(id.text(), "0 0/1\n1 1/1\n2 0/1\n3 0/1\n4 0/1\n");

    fs::write(&inp, "0 1\n1 1\n").unwrap();
    assert_eq!(
        virial(&[
            "series",
            "revert",
            "--in",
            inp.to_str().unwrap(),
            "--order",
            "3"
        ])
        .code,
        1
    );
}

#[test]
fn verify_models() {
    let tonks = virial(&[
        "verify", "--model", "tonks", "--sigma", "1", "--order", "10",
    ]);
    assert_eq!(tonks.code, 0, "{}", tonks.stderr);
    let text = tonks.text();
    for col in ["LP-improved", "PU", "classic-LP", "margin"] {
        assert!(text.contains(col));
    }
    assert_eq!(
        virial(&["verify", "--model", "tonks", "--sigma", "1/2", "--order", "8"]).code,
        0
    );
    assert_eq!(
        virial(&["verify", "--model", "ideal", "--order", "5"]).code,
        0
    );
    assert_eq!(
        virial(&["verify", "--model", "hard-sphere", "--order", "4"]).code,
        1
    );
}

#[test]
fn hard_sphere_seed_is_recorded() {
    let default = virial(&["verify", "--model", "hard-sphere", "--order", "3"]);
    assert_eq!(default.code, 0, "{}", default.stderr);
    assert!(default.text().starts_with("seed: 42 "));
    let seeded = virial_env(
        &["verify", "--model", "hard-sphere", "--order", "3"],
        &[("VIRIAL_SEED", "7")],
    );
    assert!(seeded.text().starts_with("seed: 7 "));
    assert_ne!(seeded.stdout, default.stdout);
    let bad = virial_env(
        &["verify", "--model", "hard-sphere"],
        &[("VIRIAL_SEED", "x")],
    );
    assert_eq!(bad.code, 1);
}
