//! End-to-end checks against the compiled binary: exit codes, stream
//! separation, and output stability.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclonorm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn domino_table_to_stdout() {
    let (code, stdout, stderr) = run(&["domino", "--n", "11"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[1,11,44,77,55,11]"), "{stdout}");
    assert!(stderr.is_empty(), "{stderr}");
}

#[test]
fn norm_unit_and_json() {
    let (code, stdout, _) = run(&["norm", "--poly", "1-x+x^2", "--n", "35"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("value=1 unit=true"), "{stdout}");

    let (code, stdout, _) = run(&["--format", "json", "norm", "--poly", "1-x+x^2", "--n", "35"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["command"], "norm");
    assert_eq!(v["value"], "1");
}

#[test]
fn diagnostics_go_to_stderr_with_exit_two() {
    let (code, stdout, stderr) = run(&["norm", "--poly", "1 + * x", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty(), "{stdout}");
    assert!(stderr.contains("syntax error at offset 4"), "{stderr}");

    let (code, _, stderr) = run(&["verify", "theorem2", "--max-prime", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("precondition violated"), "{stderr}");

    let (code, _, _) = run(&["norm", "--poly", "1-x"]);
    assert_eq!(code, 2); // missing --n is a usage error
}

#[test]
fn verify_streams_per_n_lines() {
    let (code, stdout, stderr) = run(&["verify", "theorem1", "--min", "5", "--max", "100"]);
    assert_eq!(code, 0);
    let admissible = (5..=100u64).filter(|n| n % 2 == 1 && n % 3 != 0).count();
    assert_eq!(stdout.lines().count(), admissible);
    assert!(stdout.lines().all(|l| l.ends_with("ok=true")), "{stdout}");
    assert!(stderr.contains("all_ok=true"), "{stderr}");
}

#[test]
fn jobs_flag_does_not_change_output() {
    let (_, base, _) = run(&["verify", "theorem2", "--max-prime", "200"]);
    let (_, jobs1, _) = run(&["verify", "theorem2", "--max-prime", "200", "--jobs", "1"]);
    let (_, jobs3, _) = run(&["verify", "theorem2", "--max-prime", "200", "--jobs", "3"]);
    assert_eq!(base, jobs1);
    assert_eq!(base, jobs3);
}
