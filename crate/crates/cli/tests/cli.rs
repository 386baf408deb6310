//! End-to-end tests of the binary: exit codes and output shapes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_euler_exit_codes_and_coefficients() {
    let out = run(&["verify-euler", "A", "1", "--degree", "100"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify-euler", "A", "2", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0\t1\t1"));
    assert!(text.contains("1\t-8\t-8"));
    assert!(text.contains("2\t20\t20"));

    // usage errors
    assert_eq!(run(&["verify-euler", "Z", "1", "--degree", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify-euler", "D", "2", "--degree", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify-euler"]).status.code(), Some(2));
}

#[test]
fn palc_row_counts() {
    let out = run(&["palc", "A", "2", "--max-exponent", "2", "--self-check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).map(str::trim).collect();
    assert_eq!(rows.len(), 4);

    for t in ["A", "B", "C", "D", "G"] {
        let rank = match t {
            "A" => "1",
            "D" => "3",
            _ => "2",
        };
        let out = run(&["palc", t, rank, "--max-exponent", "0"]);
        assert_eq!(out.status.code(), Some(0), "{}", t);
        let text = stdout(&out);
        let rows: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(rows.len(), 1, "{}", t);
        assert!(rows[0].contains("\t+1\t1\t"), "{}: {}", t, rows[0]);
    }
}

#[test]
fn palc_json_parses() {
    let out = run(&["palc", "C", "2", "--max-exponent", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let table: alcove_cli::PalcTable = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(table.rows.iter().all(|r| r.sign == 1 || r.sign == -1));
    assert_eq!(
        serde_json::from_str::<alcove_cli::PalcTable>(
            &serde_json::to_string(&table).unwrap()
        )
        .unwrap(),
        table
    );
}

#[test]
fn perm_dump_and_check_roundtrip() {
    let out = run(&["perm", "A", "3", "--word", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "A 3 3\n1 -> 0\n2 -> 2\n3 -> 4\n");

    // identity window for the empty word
    let out = run(&["perm", "B", "2"]);
    assert_eq!(stdout(&out), "B 2 5\n-2 -> -2\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 2\n");

    // pipe a dumped window back into check-perm
    let dump = stdout(&run(&["perm", "G", "2", "--word", "0,1,2,1"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(["check-perm", "G", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(dump.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("member"));
    assert!(text.contains("(length 4)"), "{}", text);
}

#[test]
fn check_perm_rejects_with_reason() {
    let dir = std::env::temp_dir().join("alcove-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad-window.txt");
    // periodicity-preserving single-entry tweak of the identity window
    std::fs::write(&path, "C 2 5\n-2 -> -2\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 7\n").unwrap();
    let out = run(&["check-perm", "C", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("antisymmetric"));

    // malformed file is a usage error
    std::fs::write(&path, "C 2 5\nnot a window\n").unwrap();
    let out = run(&["check-perm", "C", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // header must match the requested family and rank
    std::fs::write(&path, "B 2 5\n-2 -> -2\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 2\n").unwrap();
    let out = run(&["check-perm", "C", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn perm_usage_errors() {
    // generator index out of range: A 3 has generators 0..=2
    assert_eq!(run(&["perm", "A", "3", "--word", "3"]).status.code(), Some(2));
    // unsupported window size
    assert_eq!(run(&["perm", "A", "1"]).status.code(), Some(2));
    assert_eq!(run(&["perm", "D", "2"]).status.code(), Some(2));
    assert_eq!(run(&["perm", "Q", "2"]).status.code(), Some(2));
}

#[test]
fn oracle_runs_clean() {
    let out = run(&[
        "oracle", "A", "2", "--max-len", "6", "--random-words", "200", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with("\t0"), "{}", text);

    let out = run(&["oracle", "G", "2", "--max-len", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: alcove_cli::OracleOutcome = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(parsed.discrepancies.is_empty());
}
