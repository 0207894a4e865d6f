//! End-to-end checks of the command line interface.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn effdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).expect("write test file");
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_p4_prints_the_ed_line() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = effdom(&["solve", &p4]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ED 2 0 3\n");
}

#[test]
fn solve_c5_is_unknown_and_assume_flag_downgrades() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = effdom(&["solve", &c5]);
    assert!(out.status.success(), "UNKNOWN is still exit status 0");
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "UNKNOWN (not P5-free or no e.d.)\n"
    );
    let out = effdom(&["solve", &c5, "--assume-p5-free"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "NONE\n");
}

#[test]
fn solve_weighted_substituted_instance() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "sub5.txt",
        "5 5\n0 1\n0 2\n1 2\n2 3\n3 4\n",
    );
    let w = write(dir.path(), "w.txt", "5\n3\n9\n9\n2\n");
    let out = effdom(&["solve", &g, "--weights", &w, "--certify"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ED 5 1 4\n");
}

#[test]
fn oracle_agrees_and_guards_its_budget() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = effdom(&["oracle", &p4]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ED 2 0 3\n");

    let path = write(dir.path(), "big.txt", "30 0\n");
    let out = effdom(&["oracle", &path]);
    assert!(!out.status.success(), "oracle budget errors are nonzero");
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn mdtree_dumps_the_tree() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1\n");
    let out = effdom(&["mdtree", &k2]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "Series {0 1}\n  Leaf {0}\n  Leaf {1}\n"
    );
}

#[test]
fn parse_failures_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2 1\n0 0\n");
    let out = effdom(&["solve", &bad]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));
    let out = effdom(&["solve", dir.path().join("missing.txt").to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn bench_emits_csv() {
    let out = effdom(&["bench", "--family", "spider", "--sizes", "4096,8192"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,micros");
    assert_eq!(lines.len(), 3);
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3);
        let n: usize = fields[0].parse().unwrap();
        let m: usize = fields[1].parse().unwrap();
        let _micros: u128 = fields[2].parse().unwrap();
        assert!(n + m >= 2048, "instance roughly matches the target size");
    }
}
