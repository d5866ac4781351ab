use std::process::{Command, Output};

use qseries::{LaurentPoly, RationalQ};

fn nb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nb"))
        .args(args)
        .env_remove(cli::CACHE_ENV)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chord_table_contains_t20() {
    let o = nb(&["tables", "T", "--max-f", "3", "--max-n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "2\t0\tq + 2"));
}

#[test]
fn form_table_contains_b_b() {
    let o = nb(&["tables", "form", "--max", "3", "--t", "0"]);
    let want = format!("0\t1\t1\t{}", RationalQ::inv_one_minus_q_pow(-2));
    assert!(stdout(&o).lines().any(|l| l == want), "{}", stdout(&o));
}

#[test]
fn decomposition_row() {
    let o = nb(&["tables", "decomp", "--n", "0", "--t", "0", "--max-m", "2"]);
    // q^-1 / (1 - q^-4)
    let v = &RationalQ::from_laurent(LaurentPoly::q_pow(-1)) * &RationalQ::inv_one_minus_q_pow(-4);
    let want = format!("0\t0\t1\t{v}");
    assert!(stdout(&o).lines().any(|l| l == want), "{}", stdout(&o));
}

#[test]
fn json_output_is_versioned_and_deterministic() {
    let args = ["tables", "homdim", "--max-n", "2", "--format", "json"];
    let a = nb(&args);
    let b = nb(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let r = nb(&["verify", "chords", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "chords"][..],
        &["verify", "iqgroup", "--t", "1"],
        &["verify", "idempotents", "--n", "1", "--t", "1"],
        &["verify", "central", "--r", "1", "--t", "0"],
    ] {
        let o = nb(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).lines().skip(1).all(|l| l.contains("\tpass\t")));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(nb(&["tables", "w", "--max-n", "99"]).status.code(), Some(2));
    assert_eq!(nb(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(nb(&["tables", "form", "--t", "2"]).status.code(), Some(2));
    assert_eq!(
        nb(&["slot", "--m", "4", "--n", "4", "--d", "0"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn slot_uses_cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nb"))
        .args(["slot", "--m", "1", "--n", "1", "--d", "2", "--t", "1"])
        .env(cli::CACHE_ENV, dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("quotient_dim\t2"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
