mod support;

use std::io::Write;
use std::process::{Command, Stdio};

use support::{binary, run, EXIT_CODES};

#[test]
fn exit_code_contract() {
    for (args, code) in EXIT_CODES {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        if *code != 0 {
            assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
            assert!(!out.stderr.is_empty(), "{args:?} gave no diagnostic");
        }
    }
}

#[test]
fn parse_errors_carry_positions() {
    let out = run(&["simple", "--a", "x^2", "--b", "x +\n * 2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("b: line 2, column 2: found '*'"), "{err}");
}

#[test]
fn text_report_for_quintic_b() {
    let out = run(&["simple", "--a", "x^2", "--b", "x^5+x^4+x^3+x^2-2*x-1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: not simple"));
    assert!(text.contains("h: -x^3 - x^2 - x - 4"));
}

#[test]
fn isotropy_of_cubic_b_names_the_solution() {
    let out = run(&["isotropy", "--a", "2*x", "--b", "x^3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: CaseIIIFamily"));
    assert!(text.contains("h = -1/2*x^2 - 1/2"));
}

#[test]
fn stdin_inputs() {
    let mut child = Command::new(binary())
        .args(["isotropy", "--stdin", "--a", "x^2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# quintic b\na: 1\nb: x^5+x^4+x^3+x^2-2*x-1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // the flag wins over the stdin value for `a`
    assert!(text.contains("input a: x^2"), "{text}");
    assert!(text.contains("verdict: CaseIIIFamily"));
}

#[test]
fn stdin_rejects_unknown_keys() {
    let mut child = Command::new(binary())
        .args(["simple", "--stdin"])
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"c: 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn environment_overrides_defaults() {
    let out = Command::new(binary())
        .args(["flow", "--dx", "1", "--dy", "y", "--point", "0,1"])
        .env("DERIVKIT_ORDER", "3")
        .env("DERIVKIT_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["witness"]["psi_coefficients"],
        serde_json::json!(["1", "1", "1/2"])
    );
}

#[test]
fn conjugation_straightens_the_field() {
    let out = run(&[
        "conjugate",
        "--a",
        "0",
        "--b",
        "3*x^2",
        "--word",
        "elemY(x^3; 1)",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dx: 1\ndy: 0"), "{text}");
}
