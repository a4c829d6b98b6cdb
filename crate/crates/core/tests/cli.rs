//! The `gsilt` binary: golden files, exit codes and determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const ROOT: &str = env!("CARGO_MANIFEST_DIR");

fn gsilt(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsilt"))
        .current_dir(dir)
        .env_remove("GSILT_PRIME")
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn files_under(dir: &Path) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.push(p.strip_prefix(dir).unwrap().display().to_string());
            }
        }
    }
    out.sort();
    out
}

#[test]
fn build_lambda_matches_checked_in_fixtures() {
    let tmp = tempfile::tempdir().unwrap();
    let o = gsilt(tmp.path(), &["build", "lambda", "--out", "lam"]);
    assert_eq!(code(&o), 0);
    let got = tmp.path().join("lam");
    let want = Path::new(ROOT).join("data/lambda");
    for f in files_under(&got) {
        assert_eq!(fs::read(got.join(&f)).unwrap(), fs::read(want.join(&f)).unwrap(), "{f}");
    }
}

#[test]
fn enum_gproj_and_cm_auslander_reproduce_fixtures() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    assert_eq!(code(&gsilt(d, &["build", "lambda", "--out", "."])), 0);
    let o = gsilt(d, &["enum-gproj", "Lambda.alg", "--out", "E.cat"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("[2, 4, 1, 3, 2]"), "{text}");
    assert_eq!(code(&gsilt(d, &["cm-auslander", "E.cat", "--out", "Gamma.alg"])), 0);
    let want = Path::new(ROOT).join("data/lambda");
    for f in ["E.cat", "E/E1.mod", "E/E5.mod", "Gamma.alg", "Gamma.blocks"] {
        assert_eq!(fs::read(d.join(f)).unwrap(), fs::read(want.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn golden_reports_are_byte_identical() {
    let root = Path::new(ROOT);
    let tmp = tempfile::tempdir().unwrap();
    let common = ["--gproj", "data/lambda/E.cat", "--catalog", "data/lambda/C9.cat"];
    let cases: [(&str, Vec<&str>); 2] = [
        ("silting_G8", vec!["silting", "data/lambda/Lambda.alg", "data/lambda/C9/G8.mod"]),
        ("complex_theta8", vec!["complex", "data/lambda/Lambda.alg", "--theta", "data/lambda/theta8.map"]),
    ];
    for (name, mut args) in cases {
        let out = tmp.path().join(format!("{name}.json"));
        let out_s = out.display().to_string();
        args.extend(common);
        args.extend(["--report", out_s.as_str()]);
        assert_eq!(code(&gsilt(root, &args)), 0, "{name}");
        let want = fs::read(root.join(format!("data/golden/{name}.json"))).unwrap();
        assert_eq!(fs::read(&out).unwrap(), want, "{name}");
    }
}

#[test]
fn silting_on_g8_reports_false_and_expectation_is_a_violation() {
    let root = Path::new(ROOT);
    let args = [
        "silting",
        "data/lambda/Lambda.alg",
        "data/lambda/C9/G8.mod",
        "--gproj",
        "data/lambda/E.cat",
        "--catalog",
        "data/lambda/C9.cat",
    ];
    let o = gsilt(root, &args);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("verdict                                  false"));
    let mut with_expect = args.to_vec();
    with_expect.extend(["--expect", "true"]);
    assert_eq!(code(&gsilt(root, &with_expect)), 2);
}

#[test]
fn full_stalk_of_g4_is_flagged_by_the_downstream_checks() {
    let root = Path::new(ROOT);
    let o = gsilt(
        root,
        &[
            "complex",
            "data/lambda/Lambda.alg",
            "--module",
            "data/lambda/C9/G4.mod",
            "--gproj",
            "data/lambda/E.cat",
            "--catalog",
            "data/lambda/C9.cat",
        ],
    );
    assert_eq!(code(&o), 2);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("[violation]   brenner_butler"), "{text}");
}

#[test]
fn gldim_bound_passes_on_theta8() {
    let root = Path::new(ROOT);
    let o = gsilt(
        root,
        &["gldim-bound", "data/lambda/Lambda.alg", "--theta", "data/lambda/theta8.map", "--catalog", "data/lambda/C9.cat"],
    );
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("gldim B = Exactly(0), bound 2"));
}

#[test]
fn tau_rigid_star_tilting_torsion_run() {
    let root = Path::new(ROOT);
    for cmd in ["tau-rigid", "tilting", "star", "torsion"] {
        let o = gsilt(
            root,
            &[cmd, "data/lambda/Lambda.alg", "data/lambda/C9/G3.mod", "--catalog", "data/lambda/C9.cat"],
        );
        assert_eq!(code(&o), 0, "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn parse_errors_exit_with_one_and_name_the_line() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("bad.alg"), "field 2\ndim 1\nunit 1\nmult 1 1 = oops\n").unwrap();
    let o = gsilt(tmp.path(), &["enum-gproj", "bad.alg"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn small_fuzz_run_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    let a = gsilt(d, &["fuzz", "--count", "6", "--seed", "5", "--report", "a.json"]);
    let b = gsilt(d, &["fuzz", "--count", "6", "--seed", "5", "--report", "b.json"]);
    assert_eq!(code(&a), code(&b));
    assert_eq!(fs::read(d.join("a.json")).unwrap(), fs::read(d.join("b.json")).unwrap());
}

#[test]
fn prime_comes_from_the_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_gsilt"))
        .current_dir(tmp.path())
        .env("GSILT_PRIME", "3")
        .args(["build", "truncated-poly", "--n", "3", "--out", "a.alg"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(tmp.path().join("a.alg")).unwrap().starts_with("field 3"));
}
