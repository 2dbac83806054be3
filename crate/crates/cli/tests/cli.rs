//! End-to-end behaviour of the `deltagl` binary and of the library entry
//! points it wraps.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use deltagl::commands::{cmd_solve, EvalInput, EvalOutput};
use deltagl::suites::Status;
use deltagl::{run_suite, SuiteOptions};
use delta_solver::ProblemJson;
use padic_core::PadicContext;
use padic_linalg::PMatrix;
use serde_json::Value;

fn deltagl(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_deltagl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("deltagl starts");
    // The process may exit on an argument error before reading its input.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn json(out: &[u8]) -> Value {
    serde_json::from_slice(out).expect("valid JSON")
}

#[test]
fn eval_standard_lift_at_identity() {
    let out = deltagl(
        &["eval", "--p", "5", "--N", "8"],
        r#"{"lift": {"kind": "standard"}, "point": {"n": 2, "entries": [[1, 0], [0, 1]]}}"#,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out.stdout);
    assert_eq!(v["lift"], "standard");
    let phi: EvalOutput = serde_json::from_value(v).unwrap();
    let ctx = PadicContext::new(5, 1, 8).unwrap();
    assert_eq!(phi.phi.to_matrix(&ctx).unwrap(), PMatrix::identity(&ctx, 2));
    assert!(phi.delta.to_matrix(&ctx).unwrap().is_zero());
}

#[test]
fn eval_chern_lift_of_two_at_one_is_minus_four() {
    let out = deltagl(
        &["eval", "--p", "5", "--N", "10"],
        r#"{"lift": {"kind": "chern", "q": {"n": 1, "entries": [[2]]}}, "point": {"n": 1, "entries": [[1]]}}"#,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: EvalOutput = serde_json::from_slice(&out.stdout).unwrap();
    let ctx = PadicContext::new(5, 1, 10).unwrap();
    let phi = v.phi.to_matrix(&ctx).unwrap();
    assert_eq!(phi.get(0, 0).to_balanced_i128(), Some(-4));
}

#[test]
fn malformed_matrix_is_a_dimension_error() {
    let out = deltagl(
        &["eval", "--p", "5"],
        r#"{"lift": {"kind": "standard"}, "point": {"n": 2, "entries": [[1, 0], [0]]}}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(json(&out.stderr)["error"], "DimensionMismatch");
}

#[test]
fn unparseable_input_is_a_parse_error() {
    let out = deltagl(&["legendre", "--p", "5"], "{not json");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"], "Parse");
}

#[test]
fn missing_prime_is_reported() {
    let out = deltagl(&["witness"], r#"{"point": [1, 1, 1, 2]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"], "InvalidContext");
}

#[test]
fn legendre_of_two_at_five() {
    let out = deltagl(&["legendre", "--p", "5", "--N", "10"], r#"{"q": {"n": 1, "entries": [[2]]}}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out.stdout)["Phi1_balanced"], serde_json::json!([["-4"]]));
}

#[test]
fn witness_at_three() {
    let out = deltagl(&["witness", "--p", "3", "--N", "10"], r#"{"point": [1, 1, 1, 2]}"#);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["valuation"], 3);
    assert_eq!(v["is_witness"], true);
    assert_eq!(v["defect"]["coeffs"], serde_json::json!(["216"]));
}

#[test]
fn solve_with_zero_alpha_from_identity_is_identity() {
    let out = deltagl(
        &["solve", "--p", "5", "--N", "8"],
        r#"{"lift": {"kind": "standard"}, "seed": {"n": 2, "entries": [[1, 0], [0, 1]]}}"#,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out.stdout);
    let ctx = PadicContext::new(5, 1, 8).unwrap();
    let u: padic_linalg::json::MatrixJson = serde_json::from_value(v["u"].clone()).unwrap();
    assert!(u.to_matrix(&ctx).unwrap().agrees_to(&PMatrix::identity(&ctx, 2), v["prec"].as_u64().unwrap() as u32));
    assert_eq!(v["forms"]["log_derivative"], true);
}

#[test]
fn text_format_and_files() {
    let dir = std::env::temp_dir().join(format!("deltagl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.json");
    let output = dir.join("out.txt");
    let context = dir.join("ctx.json");
    std::fs::write(&input, r#"{"q": {"n": 1, "entries": [[3]]}}"#).unwrap();
    std::fs::write(&context, r#"{"p": 7, "f": 1, "N": 6}"#).unwrap();
    let args = ["legendre", "--context", context.to_str().unwrap(), "--in", input.to_str().unwrap()];
    let out = deltagl(&[&args[..], &["--out", output.to_str().unwrap(), "--format", "text"]].concat(), "");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&output).unwrap();
    assert!(text.contains("Phi1 (prec 6):"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_input_round_trips() {
    let text = r#"{"lift": {"kind": "chern", "q": {"n": 2, "entries": [[1, 0], [0, 2]]}}, "point": {"n": 2, "entries": [[1, 2], [3, 4]]}}"#;
    let parsed: EvalInput = serde_json::from_str(text).unwrap();
    let again: EvalInput = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
}

#[test]
fn solve_output_round_trips() {
    let ctx = PadicContext::new(3, 2, 7).unwrap();
    let problem: ProblemJson =
        serde_json::from_str(r#"{"lift": {"kind": "standard"}, "seed": {"n": 2, "entries": [[1, 1], [0, 1]]}}"#).unwrap();
    let out = cmd_solve(&ctx, &problem).unwrap();
    let again = serde_json::from_str(&serde_json::to_string(&out).unwrap()).unwrap();
    assert_eq!(out, again);
}

#[test]
fn bracket_suite_passes_on_one_cell() {
    let opts = SuiteOptions {
        suite: "bracket".into(),
        samples: 200,
        primes: vec![5],
        degrees: vec![1],
        dims: Some(vec![2]),
        ..SuiteOptions::default()
    };
    let report = run_suite(&opts).unwrap();
    assert!(report.passed, "{}", report.to_text());
    assert!(report.checks.iter().all(|c| c.status == Status::Pass && c.passed == 200));
}

#[test]
fn corrupted_lambda_is_caught_with_a_finite_shortfall() {
    let opts = SuiteOptions {
        suite: "outer".into(),
        samples: 5,
        primes: vec![5],
        degrees: vec![1],
        dims: Some(vec![2]),
        only: Some(vec!["chern-h-horizontal".into()]),
        corrupt_lambda: true,
        ..SuiteOptions::default()
    };
    let report = run_suite(&opts).unwrap();
    assert!(!report.passed);
    let cell = report.cells_of("chern-h-horizontal").next().unwrap();
    assert_eq!(cell.status, Status::Fail);
    assert_eq!(cell.failed, 5);
    assert!(!cell.failures.is_empty() && cell.failures.len() <= 3);
    let dump = cell.failures[0].detail.to_string();
    assert!(dump.contains("shortfall"), "{dump}");

    let out = deltagl(
        &["verify", "--suite", "outer", "--samples", "2", "--p", "5", "--f", "1", "--n", "2", "--corrupt-lambda"],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = ["verify", "--suite", "jet", "--seed", "7", "--samples", "10", "--p", "3"];
    let a = deltagl(&args, "");
    let b = deltagl(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = deltagl(&["verify", "--suite", "jet", "--seed", "8", "--samples", "10", "--p", "3"], "");
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn unknown_suite_and_format_are_errors() {
    assert_eq!(deltagl(&["verify", "--suite", "nope"], "").status.code(), Some(2));
    assert_eq!(deltagl(&["witness", "--p", "3", "--format", "xml"], "").status.code(), Some(2));
}
