//! End-to-end tests for the `tscreen` binary: output pins for each
//! subcommand, the exit-code contract (0 success, 1 property failure,
//! 2 input error), and byte-level determinism of JSON reports.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tscreen"))
        .args(args)
        .output()
        .expect("failed to spawn tscreen")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is not utf-8")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "wrong exit code\nstdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn eval_canonicalizes_a_hat_expression() {
    let out = run(&["eval", "--cartan", "sl2", "--ring", "hat", "W[1,0]*(1+V[1,1])"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "W[1,0] + W[1,0] V[1,1]");
}

#[test]
fn eval_renders_a_single_y_term_with_coefficient() {
    let out = run(&["eval", "--ring", "y", "(t^2+1) Y[1,0]^-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "(1+t^2) Y[1,0]^-1");
}

#[test]
fn eval_rejects_a_malformed_expression_with_exit_2() {
    let out = run(&["eval", "W[1,"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn eval_rejects_bad_window_even_though_it_is_unused() {
    assert_exit(&run(&["eval", "--window", "6:-6", "W[1,0]"]), 2);
    assert_exit(&run(&["eval", "--window", "abc", "W[1,0]"]), 2);
}

#[test]
fn eval_accepts_a_cartan_matrix_given_as_json() {
    let out = run(&[
        "eval",
        "--cartan",
        r#"{"C":[[2,-1],[-2,2]],"r":[2,1]}"#,
        "--ring",
        "y",
        "Y[2,0]",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "Y[2,0]");
}

#[test]
fn eval_classical_ring_uses_integer_coefficients() {
    let out = run(&["eval", "--ring", "classical", "2 Y[1,0] + Y[1,0]"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "3 Y[1,0]");

    let out = run(&["eval", "--ring", "classical", "(t^2+1) Y[1,0]"]);
    assert_exit(&out, 2);
    assert!(
        stderr(&out).contains("classical"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn screen_kills_a_kernel_element() {
    let out = run(&["screen", "--kind", "hatF", "--i", "1", "W[1,0]*(1+V[1,1])"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn screen_sends_a_classical_generator_to_its_anchored_form() {
    let out = run(&["screen", "--kind", "classicalF", "--i", "1", "Y[1,0]"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "Y[1,0]·S[1,0]");
}

#[test]
fn screen_at_a_node_without_support_gives_zero() {
    let out = run(&["screen", "--kind", "yF", "--i", "2", "--cartan", "A2", "Y[1,0]"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn screen_rejects_a_node_out_of_range() {
    let out = run(&["screen", "--kind", "yF", "--i", "5", "Y[1,0]"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("out of range"), "stderr: {}", stderr(&out));
}

#[test]
fn epoly_expands_a_dominant_hat_monomial() {
    let out = run(&["epoly", "--flavor", "hat", "--i", "1", "W[1,0]"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "W[1,0] + W[1,0] V[1,1]");
}

#[test]
fn epoly_symmetric_flavor_uses_symmetric_gauss_coefficients() {
    let out = run(&["epoly", "--flavor", "yprime", "--i", "1", "Y[1,0]^2"]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout(&out).trim(),
        "(t^-1+t) Y[1,0] Y[1,2]^-1 + Y[1,0]^2 + Y[1,2]^-2"
    );
}

#[test]
fn epoly_rejects_a_non_dominant_monomial_with_exit_2() {
    let out = run(&["epoly", "--flavor", "hat", "--i", "1", "V[1,1]"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("not dominant"), "stderr: {}", stderr(&out));
}

#[test]
fn kernel_accepts_a_kernel_expansion_and_reports_zero_normal_form() {
    let out = run(&["kernel", "--flavor", "hat", "--i", "1", "W[1,0] + W[1,0] V[1,1]"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("member: true"), "stdout: {text}");
    assert!(text.contains("screen_nf: 0"), "stdout: {text}");
}

#[test]
fn kernel_rejects_a_bare_v_with_nonzero_normal_form() {
    let out = run(&["kernel", "--flavor", "hat", "--i", "1", "V[1,1]"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("member: false"), "stdout: {text}");
    let nf_line = text
        .lines()
        .find(|l| l.starts_with("screen_nf:"))
        .expect("missing screen_nf line");
    assert_ne!(nf_line.trim(), "screen_nf: 0", "stdout: {text}");
}

#[test]
fn kernel_treats_a_scalar_as_a_member() {
    let out = run(&["kernel", "--flavor", "y", "--i", "1", "7"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("member: true"), "stdout: {text}");
}

#[test]
fn kernel_all_reports_the_intersection_verdict_per_node() {
    let out = run(&[
        "kernel", "--cartan", "A2", "--flavor", "yprime", "--i", "all", "Y[1,0]",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("member: false"), "stdout: {text}");
    assert!(text.contains("screen_nf[1]:"), "stdout: {text}");
    assert!(text.contains("screen_nf[2]:"), "stdout: {text}");
}

#[test]
fn kernel_all_requires_a_y_flavor() {
    let out = run(&["kernel", "--flavor", "hat", "--i", "all", "W[1,0]"]);
    assert_exit(&out, 2);
}

#[test]
fn verify_binom_passes() {
    let out = run(&["verify", "--suite", "binom", "--samples", "100"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("suite=binom"), "stdout: {text}");
    assert!(text.contains("failed=0"), "stdout: {text}");
}

#[test]
fn verify_kernel_hat_on_b2_passes() {
    let out = run(&[
        "verify", "--suite", "kernel-hat", "--cartan", "B2", "--window", "-6:6",
        "--samples", "50",
    ]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("failed=0"));
}

#[test]
fn verify_prop4_on_sl2_passes() {
    let out = run(&["verify", "--suite", "prop4", "--cartan", "sl2", "--samples", "50"]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("failed=0"));
}

#[test]
fn verify_rejects_an_unknown_suite_with_exit_2() {
    let out = run(&["verify", "--suite", "nosuchsuite"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown suite"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_rejects_a_simply_laced_suite_on_b2_with_exit_2() {
    let out = run(&["verify", "--suite", "lemma7", "--cartan", "B2"]);
    assert_exit(&out, 2);
    assert!(
        stderr(&out).contains("simply-laced"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn verify_json_reports_are_byte_identical_for_identical_config() {
    let args = [
        "verify", "--suite", "bicharacter", "--cartan", "B2", "--samples", "30",
        "--seed", "17", "--format", "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_exit(&first, 0);
    assert_eq!(first.stdout, second.stdout, "JSON reports differ between runs");
    let parsed: serde_json::Value =
        serde_json::from_slice(&first.stdout).expect("report is not valid JSON");
    assert_eq!(parsed["suite"], "bicharacter");
    assert_eq!(parsed["failed"], 0);
    assert_eq!(parsed["config"]["seed"], 17);
}

#[test]
fn verify_json_changes_with_the_seed() {
    let a = run(&[
        "verify", "--suite", "order", "--samples", "20", "--seed", "1", "--format", "json",
    ]);
    let b = run(&[
        "verify", "--suite", "order", "--samples", "20", "--seed", "2", "--format", "json",
    ]);
    assert_exit(&a, 0);
    assert_exit(&b, 0);
    let pa: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let pb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(pa["config"]["seed"], 1);
    assert_eq!(pb["config"]["seed"], 2);
}

#[test]
fn eval_json_output_is_deterministic_and_structured() {
    let args = [
        "eval", "--format", "json", "--ring", "y", "--cartan", "A2",
        "(t+1) Y[1,0]*Y[2,1]^-1",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_exit(&first, 0);
    assert_eq!(first.stdout, second.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let terms = parsed.as_array().expect("element JSON is an array of terms");
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["Y"]["1,0"], 1);
    assert_eq!(terms[0]["Y"]["2,1"], -1);
    assert_eq!(terms[0]["coeff"]["0"], 1);
    assert_eq!(terms[0]["coeff"]["1"], 1);
}

#[test]
fn kernel_json_report_carries_all_four_fields() {
    let out = run(&[
        "kernel", "--flavor", "y", "--i", "1", "--format", "json", "Y[1,0] + Y[1,2]^-1",
    ]);
    assert_exit(&out, 0);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["member"], true);
    assert!(parsed["dominant_part"].is_array());
    assert!(parsed["remainder"].is_array());
    assert_eq!(parsed["screen_nf"]["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn unknown_cartan_name_is_an_input_error() {
    let out = run(&["eval", "--cartan", "E9", "W[1,0]"]);
    assert_exit(&out, 2);
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = run(&[]);
    assert_exit(&out, 2);
}
