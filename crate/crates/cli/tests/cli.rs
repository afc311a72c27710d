//! End-to-end tests of the `invobase` binary against the fixture problem
//! files: output contents, exit codes, and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invobase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn gen_polys(v: &serde_json::Value) -> Vec<String> {
    v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["poly"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn parabolas_complete_to_the_known_strong_basis() {
    let v = json(&["complete", "fixtures/parabolas.prob", "--json"]);
    assert_eq!(v["strength"], "strong");
    assert_eq!(gen_polys(&v), ["y^2", "x^2", "x^2*y"]);
    let mults: Vec<Vec<&str>> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            g["mult"]
                .as_array()
                .unwrap()
                .iter()
                .map(|m| m.as_str().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(mults, [vec!["x", "y"], vec!["x"], vec!["x"]]);
}

#[test]
fn the_running_example_depends_on_the_order() {
    let v = json(&["complete", "fixtures/running_degrevlex.prob", "--json"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["strength"], "strong");

    let v = json(&["complete", "fixtures/running_deginvlex.prob", "--json"]);
    assert_eq!(v["count"], 5);
    assert!(gen_polys(&v).contains(&"z^3 - x^2".to_string()));

    // The same effect via the order override on the degrevlex file.
    let w = json(&[
        "complete",
        "fixtures/running_degrevlex.prob",
        "--order",
        "deginvlex",
        "--json",
    ]);
    assert_eq!(gen_polys(&w), gen_polys(&v));
}

#[test]
fn integer_coefficients_adjoin_the_coefficient_gcd() {
    let v = json(&["complete", "fixtures/zring.prob", "--json"]);
    assert_eq!(v["strength"], "weak");
    assert_eq!(gen_polys(&v), ["5", "2*z - 1", "3*z + 1"]);
}

#[test]
fn mutually_reducible_qpoly_generators_keep_their_content() {
    let v = json(&["complete", "fixtures/qpoly.prob", "--json"]);
    assert_eq!(gen_polys(&v), ["(t + 1)", "t*x - 1", "(t + 1)*x"]);
}

#[test]
fn local_pipelines_produce_the_expected_bases() {
    let v = json(&[
        "complete",
        "fixtures/weyl3_local.prob",
        "--local",
        "mora",
        "--json",
    ]);
    assert_eq!(gen_polys(&v), ["dy", "dx", "dz"]);

    let v = json(&[
        "complete",
        "fixtures/local_trivial.prob",
        "--local",
        "mora",
        "--allow-iterated",
        "--json",
    ]);
    assert_eq!(gen_polys(&v), ["1"]);

    let v = json(&[
        "complete",
        "fixtures/weyl3_local.prob",
        "--local",
        "homog",
        "--json",
    ]);
    assert!(v["homogeneous_size"].as_u64().unwrap() > 0);
}

#[test]
fn nf_reports_the_remainder() {
    let v = json(&["nf", "fixtures/running_degrevlex.prob", "--json"]);
    assert_eq!(v["remainder"], "x^2");
    assert_eq!(v["zero"], false);
}

#[test]
fn mora_nf_reports_the_unit_and_involutive_flag() {
    let v = json(&["mora-nf", "fixtures/weyl3_local.prob", "--json"]);
    assert_eq!(v["remainder"], "dx");
    assert_eq!(v["unit"], "1");
    assert_eq!(v["involutive"], true);
}

#[test]
fn mono_complete_matches_the_polynomial_completion_on_monomials() {
    let v = json(&["mono-complete", "fixtures/parabolas.prob", "--json"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["strength"], "strong");
}

#[test]
fn oracle_check_agrees_on_the_running_example() {
    let out = run(&["oracle-check", "fixtures/running_degrevlex.prob"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("agree"));
}

#[test]
fn validate_algebra_accepts_the_builtin_relations() {
    let out = run(&["validate-algebra", "fixtures/so3.prob"]);
    assert!(out.status.success());
}

#[test]
fn cap_overflow_exits_with_code_2() {
    let out = run(&[
        "complete",
        "fixtures/pommaret_cap.prob",
        "--max-insertions",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn oracle_mismatch_and_bad_input_exit_codes() {
    let out = run(&["complete", "fixtures/no_such_file.prob"]);
    assert_eq!(out.status.code(), Some(1));

    // --local requires field coefficients: generic failure, code 1.
    let out = run(&["complete", "fixtures/zring.prob", "--local", "mora"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for fixture in [
        "fixtures/running_deginvlex.prob",
        "fixtures/zring.prob",
        "fixtures/qpoly.prob",
    ] {
        let a = run(&["complete", fixture, "--json"]);
        let b = run(&["complete", fixture, "--json"]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {fixture}");
    }
}
