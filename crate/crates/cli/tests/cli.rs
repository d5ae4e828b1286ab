//! End-to-end tests for the binary: exact stdout bytes, determinism, and
//! the exit-status contract (0 ok, 1 verification failure, 2 usage/parse,
//! 3 resource limit).

use std::process::{Command, Output};

fn qtriangles(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtriangles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = qtriangles(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    qtriangles(args).status.code().expect("has exit code")
}

#[test]
fn triangle_catalan_matches_display() {
    let out = stdout_of(&["triangle", "catalan", "--order", "2", "--rows", "4"]);
    assert_eq!(
        out,
        "-1 0 1\n-1 0 0 0 1\n-1 0 -1 0 1 0 1\n-1 0 -2 0 0 0 2 0 1\n"
    );
}

#[test]
fn triangle_general_matches_weighted_example() {
    let out = stdout_of(&[
        "triangle",
        "general",
        "--poly",
        "q^2+q+3+q^-1+q^-2",
        "--rows",
        "4",
    ]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "-1 0 1");
    assert_eq!(rows[1], "-1 -1 -2 0 2 1 1");
    assert_eq!(rows[2], "-1 -2 -6 -6 -6 0 6 6 6 2 1");
    assert_eq!(rows[3], "-1 -3 -11 -19 -33 -32 -24 0 24 32 33 19 11 3 1");
}

#[test]
fn triangle_single_row() {
    assert_eq!(
        stdout_of(&["triangle", "pascal", "--order", "2", "--rows", "1"]),
        "1\n"
    );
}

#[test]
fn triangle_csv_format() {
    let out = stdout_of(&[
        "triangle", "pascal", "--order", "2", "--rows", "3", "--format", "csv",
    ]);
    assert_eq!(out, "1\n1,0,1\n1,0,2,0,1\n");
}

#[test]
fn expand_power_four() {
    let out = stdout_of(&["expand", "q+q^-1", "--power", "4"]);
    assert_eq!(out, "1 2\n3 3\n5 1\n");
}

#[test]
fn expand_constant() {
    assert_eq!(stdout_of(&["expand", "1"]), "1 1\n");
}

#[test]
fn expand_rejects_asymmetric_input() {
    let out = qtriangles(&["expand", "q^2+q"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("symmetry"), "stderr: {stderr}");
}

#[test]
fn decompose_examples() {
    let out = stdout_of(&["decompose", "--rep", "2", "--power", "10"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "V(1) 42");
    assert_eq!(*lines.last().unwrap(), "dim 1024");

    let out = stdout_of(&["decompose", "--rep", "2:1+3:1", "--power", "6"]);
    assert!(out.starts_with("V(1) 245\n"), "got: {out}");
    assert!(out.ends_with("dim 15625\n"), "got: {out}");

    let out = stdout_of(&["decompose", "--rep", "1", "--power", "7"]);
    assert_eq!(out, "V(1) 1\ndim 1\n");
}

#[test]
fn verify_checks_pass() {
    for (check, extra) in [
        ("squares", vec!["--d", "2..4", "--n", "8"]),
        ("catalan-formula", vec!["--d", "2..4", "--n", "8"]),
        ("motzkin-formulas", vec!["--d", "3", "--n", "8"]),
        ("paths", vec!["--d", "2..3", "--n", "6"]),
        ("bratteli", vec!["--d", "2..4", "--n", "6"]),
    ] {
        let mut args = vec!["verify", check];
        args.extend(extra);
        let out = qtriangles(&args);
        assert_eq!(out.status.code(), Some(0), "check {check} failed");
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(stdout.lines().all(|l| l.starts_with("PASS")), "{stdout}");
        assert!(stdout.lines().count() >= 1);
    }
}

#[test]
fn seq_bfile_is_bit_exact() {
    let out = qtriangles(&["seq", "motzkin", "--count", "7", "--format", "bfile"]);
    assert_eq!(out.stdout, b"0 1\n1 1\n2 2\n3 4\n4 9\n5 21\n6 51\n");
}

#[test]
fn seq_text_examples() {
    assert_eq!(
        stdout_of(&["seq", "riordan", "--count", "9"]),
        "1,0,1,1,3,6,15,36,91\n"
    );
    assert_eq!(stdout_of(&["seq", "catalan", "--count", "1"]), "1\n");
    assert_eq!(
        stdout_of(&["seq", "motzkin(3)", "--count", "7"]),
        "1,0,2,4,17,61,245\n"
    );
    assert_eq!(
        stdout_of(&["seq", "sum_of_squares(3,catalan)", "--count", "6"]),
        "1,1,3,15,91,603\n"
    );
}

#[test]
fn invocations_are_deterministic() {
    let args = ["triangle", "motzkin", "--order", "3", "--rows", "7"];
    let first = qtriangles(&args);
    let second = qtriangles(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());
}

#[test]
fn exit_status_contract() {
    // 2: usage and parse errors
    assert_eq!(exit_code(&["seq", "fibonacci", "--count", "3"]), 2);
    assert_eq!(
        exit_code(&["triangle", "pascal", "--order", "1", "--rows", "2"]),
        2
    );
    assert_eq!(
        exit_code(&["triangle", "general", "--poly", "q^+1", "--rows", "2"]),
        2
    );
    assert_eq!(exit_code(&["triangle", "pascal", "--rows", "2"]), 2);
    assert_eq!(exit_code(&["decompose", "--rep", "0:1", "--power", "2"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);

    // 3: resource limits
    assert_eq!(exit_code(&["verify", "squares", "--n", "1000"]), 3);
    assert_eq!(exit_code(&["verify", "squares", "--d", "2..100"]), 3);
    assert_eq!(exit_code(&["seq", "catalan", "--count", "100000"]), 3);
    assert_eq!(
        exit_code(&["triangle", "pascal", "--order", "2", "--rows", "5000"]),
        3
    );
    assert_eq!(exit_code(&["expand", "q+q^-1", "--power", "1000000"]), 3);
}
