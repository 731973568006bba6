use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn magrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magrep"))
        .args(args)
        .env_remove("MAGREP_SEED")
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> Vec<(String, String, String)> {
    stdout(o)
        .lines()
        .skip(2)
        .map(|l| {
            let w: Vec<&str> = l.split_whitespace().collect();
            (w[0].to_string(), w[1].to_string(), w[2].to_string())
        })
        .collect()
}

fn row(label: &str, kind: &str, dim: &str) -> (String, String, String) {
    (label.into(), kind.into(), dim.into())
}

#[test]
fn classify_quaternion_table() {
    let out = magrep(&["classify", "builtin", "quaternion"]);
    assert!(out.status.success());
    assert_eq!(
        rows(&out),
        vec![
            row("χ0", "R", "1"),
            row("χ1", "H", "2"),
            row("χ2", "R", "1"),
            row("χ3", "H", "2")
        ]
    );
}

#[test]
fn classify_dihedral_and_cyclic_tables() {
    let d5 = rows(&magrep(&["classify", "builtin", "dihedral", "5"]));
    assert_eq!(d5.len(), 5);
    assert!(d5.iter().all(|(_, k, d)| k == "R" && d == "1"));
    let z8 = rows(&magrep(&["classify", "builtin", "cyclic", "8"]));
    assert_eq!(
        z8,
        vec![
            row("χ0", "R", "1"),
            row("{χ1,χ3}", "C", "2"),
            row("χ2", "H", "2")
        ]
    );
}

#[test]
fn classify_from_files() {
    let q = magrep(&["classify", &data("q8.mgrp")]);
    let builtin = magrep(&["classify", "builtin", "quaternion"]);
    assert_eq!(rows(&q), rows(&builtin));
    assert!(stdout(&q).starts_with("magnetic group Q8:"));
    let z4 = rows(&magrep(&["classify", &data("z4.mgrp")]));
    assert_eq!(z4, vec![row("χ0", "R", "1"), row("χ1", "H", "2")]);
}

#[test]
fn classify_json_schema() {
    let out = magrep(&["classify", "builtin", "quaternion", "--json"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["name"], "Q8");
    assert_eq!(doc["order"], 8);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 4);
    let c1 = &classes[1];
    assert_eq!(c1["labels"][0], "χ1");
    assert_eq!(c1["type"], "H");
    assert_eq!(c1["dim"], 2);
    assert_eq!(c1["character"].as_array().unwrap().len(), 4);
    let mats = c1["matrices"].as_array().unwrap();
    assert_eq!(mats.len(), 8);
    assert_eq!(mats[4]["element"], 4);
    assert_eq!(mats[4]["grade"], 1);
    let entry = &mats[4]["matrix"][0][1];
    assert!((entry[0].as_f64().unwrap() + 1.0).abs() < 1e-12);
    assert_eq!(entry[1].as_f64(), Some(0.0));
}

#[test]
fn classify_is_deterministic_for_a_seed() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_magrep"))
            .args(["classify", "builtin", "dihedral", "6", "--json"])
            .env("MAGREP_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("0"), run("0"));
    assert_eq!(
        run("0"),
        magrep(&["classify", "builtin", "dihedral", "6", "--json"]).stdout
    );
    let flag = magrep(&[
        "classify", "builtin", "dihedral", "6", "--json", "--seed", "7",
    ]);
    assert_eq!(run("7"), flag.stdout);
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        vec!["classify", "builtin", "cyclic", "3"],
        vec!["classify", "/nonexistent/group.mgrp"],
        vec!["verify", "/nonexistent/x.corep"],
    ] {
        let out = magrep(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_reports_residuals() {
    let good = magrep(&["verify", &data("z4_quarter_turn.corep")]);
    assert_eq!(good.status.code(), Some(0));
    assert!(stdout(&good).starts_with("max residual"));

    let dir = tempfile::tempdir().unwrap();
    // The generator squares to -1 but element 2 claims +1.
    let bad = write(
        dir.path(),
        "bad.corep",
        "corep v1\nbuiltin cyclic 4\ndim 1\nelement 1 grade 1\n1 0\nelement 2 grade 0\n-1 0\nelement 3 grade 1\n1 0\n",
    );
    let out = magrep(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let grade = write(
        dir.path(),
        "grade.corep",
        "corep v1\nbuiltin cyclic 4\ndim 1\nelement 1 grade 0\n1 0\n",
    );
    assert_eq!(
        magrep(&["verify", grade.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn regular_then_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reg.corep");
    let z4 = data("z4.mgrp");
    let made = magrep(&["regular", "--group", &z4, "--out", out.to_str().unwrap()]);
    assert!(made.status.success());
    assert_eq!(
        magrep(&["verify", out.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let dec = magrep(&["decompose", out.to_str().unwrap(), "--group", &z4, "--json"]);
    assert!(dec.status.success());
    let doc: Value = serde_json::from_slice(&dec.stdout).unwrap();
    assert_eq!(doc["dim"], 4);
    let m: Vec<(String, u64)> = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["type"].as_str().unwrap().to_string(),
                e["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(m, vec![("R".to_string(), 2), ("H".to_string(), 1)]);
}

#[test]
fn induce_accepts_label_spellings() {
    let dir = tempfile::tempdir().unwrap();
    for label in ["1", "χ1", "chi1"] {
        let out = dir.path().join(format!("ind{}.corep", label.len()));
        let made = magrep(&[
            "induce",
            "--group",
            "builtin cyclic 8",
            "--irrep",
            label,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(made.status.success(), "{label}");
        let dec = magrep(&["decompose", out.to_str().unwrap()]);
        let table = stdout(&dec);
        let line = table.lines().find(|l| l.starts_with("{χ1,χ3}")).unwrap();
        assert!(line.trim_end().ends_with(" 1"));
    }
    let missing = magrep(&[
        "induce",
        "--group",
        "builtin quaternion",
        "--irrep",
        "9",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(missing.status.code(), Some(1));
}
