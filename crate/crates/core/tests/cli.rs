use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn hopflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(args)
        .env_remove("HOPFLAB_SEED")
        .output()
        .expect("binary runs")
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    assert_eq!(hopflab(&["check", path(&corpus("s3_gf7.hopf"))]).status.code(), Some(0));
    assert_eq!(hopflab(&["check", path(&corpus("c3_gf3.hopf"))]).status.code(), Some(1));
    let bad = hopflab(&["check", path(&corpus("malformed.hopf"))]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 6"));
    assert_eq!(hopflab(&["check", "/nonexistent.hopf"]).status.code(), Some(2));
    assert_eq!(hopflab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn s3_table_from_cli() {
    let out = hopflab(&["indicators", path(&corpus("s3_gf7.hopf")), "--n-range", "1..3", "--format", "json-lines"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .filter(|v: &serde_json::Value| v["record"] == "indicators" && v["index"].is_u64())
        .collect();
    assert_eq!(rows.len(), 3);
    for r in &rows {
        assert_eq!(r["values"][1], "[1]");
    }
}

#[test]
fn machine_output_is_deterministic() {
    let file = corpus("d_s3_gf7.hopf");
    let args = ["wedderburn", path(&file), "--format", "json-lines", "--seed", "17"];
    let a = hopflab(&args);
    let b = hopflab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(["wedderburn", path(&corpus("s3_gf7.hopf"))])
        .env("HOPFLAB_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn module_routes_side_by_side() {
    let out = hopflab(&[
        "indicators",
        path(&corpus("s3_gf7.hopf")),
        "--module",
        path(&corpus("s3_standard.module")),
        "--n-range",
        "1..3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS route_equivalence_n3"));
}

#[test]
fn twist_check_passes() {
    let out = hopflab(&[
        "twist-check",
        path(&corpus("k4dual_gf5.hopf")),
        "--twist",
        path(&corpus("k4_bichar.twist")),
        "--n-range",
        "-4..4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS indicator_multisets_agree"));
}

#[test]
fn twist_for_another_algebra_is_rejected() {
    let out = hopflab(&["twist-check", path(&corpus("c4dual_gf5.hopf")), "--twist", path(&corpus("k4_bichar.twist"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_and_extend_field() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c3_gf5.hopf");
    let built = hopflab(&["build", "--group", "c3", "--p", "5", "-o", path(&file)]);
    assert_eq!(built.status.code(), Some(0));
    assert_eq!(hopflab(&["wedderburn", path(&file)]).status.code(), Some(1));
    let out = hopflab(&["wedderburn", path(&file), "--extend-field"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("field extended from GF(5) to GF(5^2"));
}

#[test]
fn corpus_regeneration_matches_bundled_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hopflab(&["corpus", "--out", path(&dir.path().to_path_buf())]).status.code(), Some(0));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let entry = entry.unwrap();
        let fresh = std::fs::read(entry.path()).unwrap();
        let bundled = std::fs::read(corpus(entry.file_name().to_str().unwrap())).unwrap();
        assert!(fresh == bundled, "{:?} differs from the bundled copy", entry.file_name());
    }
}
