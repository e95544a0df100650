//! End-to-end tests of the installed binary: golden text output, JSON
//! envelope stability, cache transparency and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn e9(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e9"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = e9(args);
    assert!(out.status.success(), "exit {:?} for {args:?}", out.status);
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn decompose_table_goldens() {
    assert_eq!(stdout_of(&["decompose", "--n", "1"]), "1 · [Λ1]\n");
    assert_eq!(
        stdout_of(&["decompose", "--n", "2"]),
        "1 · [Λ0]\n1 · [2Λ1]\n1 · [Λ2]\n"
    );
}

#[test]
fn decompose_json_payload() {
    let text = stdout_of(&["--format", "json", "decompose", "--n", "3"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["command"], "decompose");
    assert_eq!(value["format_version"], "e9-cli-v1");
    let entries = value["payload"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    let mut mults: Vec<&str> = entries
        .iter()
        .map(|e| e["mult"].as_str().unwrap())
        .collect();
    mults.sort_unstable();
    assert_eq!(mults, vec!["1", "1", "2", "2", "3"]);
}

#[test]
fn json_output_is_byte_stable() {
    let first = e9(&["--format", "json", "decompose", "--n", "2"]);
    let second = e9(&["--format", "json", "decompose", "--n", "2"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn delta_and_k_goldens() {
    assert_eq!(
        stdout_of(&["delta", "--label", "0,0,0,0,0,0,0,0,1;0"]),
        "Δ = 1/2\n"
    );
    assert_eq!(
        stdout_of(&["delta", "--label", "0,0,0,0,0,0,0,0,2;0"]),
        "Δ = 1\n"
    );
    assert_eq!(stdout_of(&["k", "--label", "1,0,0,0,0,0,0,0,0;0"]), "k = -2\n");
    assert_eq!(stdout_of(&["k", "--label", "0,0,0,0,0,0,0,0,1;0"]), "k = 1\n");
}

#[test]
fn genfun_golden() {
    assert_eq!(
        stdout_of(&["genfun", "--max-n", "8"]),
        "1 1 3 5 10 15 27 39 63\n"
    );
}

#[test]
fn straight_listing() {
    let text = stdout_of(&["straight"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 200);
    assert_eq!(
        lines[0],
        "I 0 1/1 0/1 1/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1"
    );
}

#[test]
fn initial_catalog_listing() {
    let text = stdout_of(&["initial", "--n", "2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("1,0,0,0,0,0,0,0,0;0"));
    assert!(lines[0].ends_with("Λ0"));
}

#[test]
fn oracle_agrees_with_decompose_over_the_pipe() {
    let oracle = stdout_of(&["oracle", "--n", "2", "--depth-doubled", "3"]);
    let table = stdout_of(&["decompose", "--n", "2"]);
    assert_eq!(oracle, table);
}

#[test]
fn witness_output_and_rejection() {
    let text = stdout_of(&["witness", "--label", "1,0,0,0,0,0,0,0,0;0"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let bad = e9(&["witness", "--label", "0,0,0,0,0,0,0,1,1;2"]);
    assert_eq!(bad.status.code(), Some(2));
    let stderr = String::from_utf8(bad.stderr).unwrap();
    assert!(stderr.contains("0,0,0,0,0,0,0,1,1;2"));
}

#[test]
fn verify_exit_codes_and_final_line() {
    let out = e9(&["verify", "--lemma", "subtraction", "--max-level", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last().unwrap(), "OK, 0 counterexamples");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(e9(&["decompose", "--n", "0"]).status.code(), Some(2));
    assert_eq!(e9(&["decompose"]).status.code(), Some(2));
    assert_eq!(e9(&["delta", "--label", "1,2;0"]).status.code(), Some(2));
    assert_eq!(e9(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn cache_round_trip_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = stdout_of(&["decompose", "--n", "3"]);
    let cold = stdout_of(&["--cache-dir", cache, "decompose", "--n", "3"]);
    let warm = stdout_of(&["--cache-dir", cache, "decompose", "--n", "3"]);
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);
    for m in 1..=3 {
        assert!(Path::new(cache).join(format!("e9-table-v1.n{m}.json")).exists());
    }
    // A corrupted table must be a loud error, not silent recomputation.
    std::fs::write(Path::new(cache).join("e9-table-v1.n2.json"), "{broken").unwrap();
    let broken = e9(&["--cache-dir", cache, "decompose", "--n", "3"]);
    assert_eq!(broken.status.code(), Some(2));
}
