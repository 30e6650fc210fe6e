use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn locchrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locchrom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_families() {
    let out = locchrom(&["gen", "star", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n 5\ne 0 1\ne 0 2\ne 0 3\ne 0 4\n");

    let out = locchrom(&["gen", "double-star", "1", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n 5\n"));

    assert_eq!(code(&locchrom(&["gen", "cycle", "2"])), 64);
    assert_eq!(code(&locchrom(&["gen", "hypercube", "3"])), 64);
    assert_eq!(code(&locchrom(&["gen", "random", "5", "1.5"])), 64);
}

#[test]
fn random_gen_is_seeded() {
    let a = locchrom(&["--seed", "9", "gen", "random", "7", "0.3"]);
    let b = locchrom(&["--seed", "9", "gen", "random", "7", "0.3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chil_resolves_with_certificate() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.graph", "n 2\ne 0 1\n");
    let out = locchrom(&["corona", s(&p2), s(&p2)]);
    assert_eq!(code(&out), 0);
    let product = write(&dir, "product.graph", &stdout(&out));

    let out = locchrom(&["--format", "json", "chil", s(&product)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "resolved");
    assert_eq!(v["value"], 4);
}

#[test]
fn budget_exhaustion_is_indeterminate() {
    let dir = TempDir::new().unwrap();
    let wheel = write(
        &dir,
        "w.graph",
        "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 4 0\ne 4 1\ne 4 2\ne 4 3\n",
    );
    let out = locchrom(&["--budget", "3", "--format", "json", "chil", s(&wheel)]);
    assert_eq!(code(&out), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "indeterminate");
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(code(&locchrom(&[])), 64);
    assert_eq!(code(&locchrom(&["--budget", "0", "gen", "path", "3"])), 64);
    assert_eq!(code(&locchrom(&["--help"])), 0);
    assert_eq!(code(&locchrom(&["chil", "/nonexistent/graph"])), 74);

    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.graph", "n 3\ne 0 0\n");
    let out = locchrom(&["chil", s(&bad)]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let split = write(&dir, "split.graph", "n 4\ne 0 1\ne 2 3\n");
    assert_eq!(code(&locchrom(&["chil", s(&split)])), 64);
}

#[test]
fn shipped_fixture_verifies() {
    let dir = fixtures().join("theorem2");
    let out = locchrom(&[
        "verify",
        s(&dir.join("product.graph")),
        s(&dir.join("coloring.json")),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "locating\n");
}

#[test]
fn tampered_fixture_is_invalid_with_witness() {
    let dir = fixtures().join("theorem2");
    let text = fs::read_to_string(dir.join("coloring.json")).unwrap();
    let mut c: serde_json::Value = serde_json::from_str(&text).unwrap();
    // (u) and (v) are adjacent; give (u) the color of (v)
    c["colors"][0] = c["colors"][1].clone();
    let tmp = TempDir::new().unwrap();
    let tampered = write(&tmp, "c.json", &c.to_string());
    let out = locchrom(&[
        "--format",
        "json",
        "verify",
        s(&dir.join("product.graph")),
        s(&tampered),
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["locating"], false);
    assert!(v["witness"]["kind"].is_string());
}

#[test]
fn swap_inside_one_copy_breaks_codes() {
    let dir = fixtures().join("theorem2");
    let text = fs::read_to_string(dir.join("coloring.json")).unwrap();
    let mut c: serde_json::Value = serde_json::from_str(&text).unwrap();
    // swap (u,p) and (u,s): still proper, but (u,p) now shares the code of (v,q)
    let colors = c["colors"].as_array_mut().unwrap();
    colors.swap(5, 8);
    let tmp = TempDir::new().unwrap();
    let tampered = write(&tmp, "c.json", &c.to_string());
    let out = locchrom(&[
        "--format",
        "json",
        "verify",
        s(&dir.join("product.graph")),
        s(&tampered),
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["proper"], true);
    assert_eq!(v["witness"]["kind"], "code-collision");
    assert_eq!(
        (v["witness"]["u"].clone(), v["witness"]["v"].clone()),
        (5.into(), 13.into())
    );
}

#[test]
fn bounds_for_fixture_hosts() {
    let dir = fixtures().join("theorem2");
    let out = locchrom(&[
        "--format",
        "json",
        "bounds",
        s(&dir.join("g.graph")),
        s(&dir.join("h.graph")),
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lower"], 5);
    assert_eq!(v["upper"], 9);
}

#[test]
fn fixture_bundle_matches_checked_in_files() {
    let tmp = TempDir::new().unwrap();
    let out = locchrom(&["fixture", "theorem2", "--out-dir", s(tmp.path())]);
    assert_eq!(code(&out), 0);
    for name in [
        "product.graph",
        "coloring.json",
        "certificate.json",
        "codes.json",
        "corona_map.json",
    ] {
        assert_eq!(
            fs::read(tmp.path().join(name)).unwrap(),
            fs::read(fixtures().join("theorem2").join(name)).unwrap(),
            "{name}"
        );
    }
    assert_eq!(code(&locchrom(&["fixture", "empty-corona", "2", "1"])), 64);
    assert_eq!(code(&locchrom(&["fixture", "nope"])), 64);
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["--format", "json", "fixture", "theorem2"][..],
        &["--format", "json", "fixture", "star", "30"],
        &["--format", "json", "fixture", "empty-corona", "4", "3"],
    ] {
        let a = locchrom(args);
        let b = locchrom(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
}
