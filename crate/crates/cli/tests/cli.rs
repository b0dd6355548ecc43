//! End-to-end checks of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctilde2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn basic_commands() {
    assert_eq!(stdout(&["length", "s0 s1"]).trim(), "2");
    assert_eq!(stdout(&["length", "tau"]).trim(), "0");
    assert_eq!(stdout(&["classify", "tau"]).trim(), "BTau(0)");
    assert_eq!(stdout(&["classify", "t(1,0)*s21"]).trim(), "O2");
    let word = stdout(&["reduce", "t(1,0)*s121"]);
    assert_eq!(word.trim(), "s0");
    let word = stdout(&["reduce", "t(0,1)*s212"]);
    assert_eq!(word.trim(), "tau");
}

#[test]
fn classpoly_tables() {
    let table = stdout(&["classpoly", "s1 s2"]);
    assert_eq!(table.trim(), "O2: 1");
    let table = stdout(&["classpoly", "t(1,0)*s21"]);
    assert_eq!(table.trim(), "O2: 1\nC(0): v - v^-1");
    let table = stdout(&["classpoly", "t(0,2)"]);
    assert_eq!(table.trim(), "O[0,2]: 1");
    let json = stdout(&["classpoly", "t(1,0)*s21", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["element"], "t(1,0)*s21");
    assert_eq!(value["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn dim_command() {
    assert!(stdout(&["dim", "s1", "b=basic,k=0"]).contains("dim = 1"));
    assert!(stdout(&["dim", "tau", "b=basic,k=1"]).contains("dim = 0"));
    assert!(stdout(&["dim", "t(0,0)*e", "b=basic,k=0"]).contains("dim = 0"));
    // kappa mismatch
    assert_eq!(stdout(&["dim", "tau", "b=basic,k=0"]).trim(), "EMPTY");
    // non-straight b rejected with a hint
    let out = run(&["dim", "s1", "b=A(1)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not straight"), "{err}");
    assert!(err.contains("O[1,0]"), "{err}");
}

#[test]
fn parse_errors_exit_2() {
    let out = run(&["length", "s3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"), "{err}");
    let out = run(&["classify", "t(1,0)*bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_relations_and_lengths() {
    let out = run(&["verify", "--suite", "relations"]);
    assert!(out.status.success());
    let out = run(&["verify", "--suite", "lengths", "--max-length", "8"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn verify_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("ctilde2-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache = dir.join("memo.jsonl");
    let report_cold = dir.join("cold.json");
    let report_warm = dir.join("warm.json");
    let base = [
        "verify",
        "--suite",
        "degrees",
        "--max-length",
        "8",
        "--json",
    ];
    let mut cold: Vec<&str> = base.to_vec();
    let cache_s = cache.to_str().unwrap().to_string();
    let cold_s = report_cold.to_str().unwrap().to_string();
    let warm_s = report_warm.to_str().unwrap().to_string();
    cold.extend(["--cache", &cache_s, "--report", &cold_s]);
    assert!(run(&cold).status.success());
    assert!(Path::new(&cache).exists());
    let size_after_cold = std::fs::metadata(&cache).unwrap().len();
    let mut warm: Vec<&str> = base.to_vec();
    warm.extend(["--cache", &cache_s, "--report", &warm_s]);
    assert!(run(&warm).status.success());
    // warm run appends nothing new and reproduces the report byte for byte
    assert_eq!(std::fs::metadata(&cache).unwrap().len(), size_after_cold);
    assert_eq!(
        std::fs::read(&report_cold).unwrap(),
        std::fs::read(&report_warm).unwrap()
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_seeded_identical() {
    let a = stdout(&[
        "verify", "--suite", "degrees", "--max-length", "7", "--json", "--seed", "3",
    ]);
    let b = stdout(&["verify", "--suite", "degrees", "--max-length", "7", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn allowlist_parsing() {
    let dir = std::env::temp_dir().join(format!("ctilde2-allow-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let list = dir.join("allow.json");
    std::fs::write(
        &list,
        r#"[{"element": "t(9,9)*e", "class": "O2", "note": "placeholder"}]"#,
    )
    .unwrap();
    let list_s = list.to_str().unwrap().to_string();
    let out = run(&[
        "verify",
        "--suite",
        "degrees",
        "--max-length",
        "6",
        "--allowlist",
        &list_s,
    ]);
    assert!(out.status.success());
    // malformed allowlist is a usage error
    std::fs::write(&list, "{not json").unwrap();
    let out = run(&[
        "verify",
        "--suite",
        "degrees",
        "--max-length",
        "6",
        "--allowlist",
        &list_s,
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_csv_columns() {
    let csv = stdout(&[
        "verify",
        "--suite",
        "degrees",
        "--max-length",
        "6",
        "--csv",
    ]);
    assert!(csv.starts_with("element,length,class,degree,dimension\n"));
}
