//! End-to-end tests driving the compiled `hw` binary: exit codes, stream
//! separation, byte determinism, pipelines, and the environment cap.

use std::process::{Command, Output};

fn hw() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hw"));
    cmd.env_remove("HW_MAX_DIM");
    cmd
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn singular_gram_is_a_math_error_on_stderr() {
    let out = hw().args(["coxeter", "--gram", "[[1,0],[0,0]]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr_str(&out));
    assert!(stderr_str(&out).contains("singular"), "stderr: {}", stderr_str(&out));
    assert!(out.stdout.is_empty(), "results stream must stay clean on failure");
}

#[test]
fn malformed_entry_is_a_parse_error_with_position() {
    let out = hw().args(["cartan", "--gram", "[[1.5]]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr_str(&out));
    let err = stderr_str(&out);
    assert!(err.contains("gram[0][0]"), "positional path missing: {err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = hw().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr_str(&out).is_empty());
}

#[test]
fn hom_of_simples_from_fixture_files() {
    let out = hw()
        .args([
            "hom",
            "--quiver",
            &fixture("a2.json"),
            "--left",
            &fixture("s1.json"),
            "--right",
            &fixture("s2.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    assert_eq!(stdout_str(&out), "{\"hom\":0,\"ext\":1}\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn tau_output_pipes_back_into_indec() {
    let tau = hw()
        .args(["tau", "--quiver", &fixture("a2.json"), "--left", &fixture("s1.json")])
        .output()
        .unwrap();
    assert_eq!(tau.status.code(), Some(0), "stderr: {}", stderr_str(&tau));
    let translated = stdout_str(&tau);
    assert!(translated.contains("\"dims\":[0,1]"), "stdout: {translated}");

    let indec = hw()
        .args(["indec", "--quiver", &fixture("a2.json"), "--left", translated.trim()])
        .output()
        .unwrap();
    assert_eq!(indec.status.code(), Some(0), "stderr: {}", stderr_str(&indec));
    assert_eq!(stdout_str(&indec), "{\"indecomposable\":true}\n");
}

#[test]
fn projective_translate_is_a_math_error() {
    let out = hw()
        .args(["tau", "--quiver", &fixture("a2.json"), "--left", &fixture("s2.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr_str(&out));
    assert!(stderr_str(&out).contains("projective"), "stderr: {}", stderr_str(&out));
}

#[test]
fn verification_suite_passes_and_reports_each_check() {
    let out = hw().args(["verify-paper", "--grid", "3", "--genus-max", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let table = stdout_str(&out);
    assert!(table.contains("PASS"));
    assert!(!table.contains("FAIL"), "table: {table}");
    for name in ["curve_coxeter", "tau_dimension_law", "tilting_sequences", "classifier_suite"] {
        assert!(table.contains(name), "missing check {name}: {table}");
    }
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let run = || {
        hw().args([
            "verify-paper",
            "--grid",
            "2",
            "--genus-max",
            "2",
            "--seed",
            "7",
            "--format",
            "json",
        ])
        .output()
        .unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0), "stderr: {}", stderr_str(&a));
    assert_eq!(a.stdout, b.stdout);

    let classify = || {
        hw().args(["classify", "--genus", "2", "--bound", "3"]).output().unwrap()
    };
    let c = classify();
    let d = classify();
    assert_eq!(c.status.code(), Some(0), "stderr: {}", stderr_str(&c));
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn enumeration_respects_the_dimension_cap() {
    let capped = hw()
        .args(["enumerate", "--quiver", &fixture("d4.json"), "--bound", "6"])
        .env("HW_MAX_DIM", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(0), "stderr: {}", stderr_str(&capped));
    assert!(
        stdout_str(&capped).contains("\"count\":11"),
        "cap 1 must exclude the highest root: {}",
        stdout_str(&capped)
    );

    let full = hw()
        .args(["enumerate", "--quiver", &fixture("d4.json"), "--bound", "6"])
        .output()
        .unwrap();
    assert_eq!(full.status.code(), Some(0), "stderr: {}", stderr_str(&full));
    assert!(stdout_str(&full).contains("\"count\":12"), "stdout: {}", stdout_str(&full));
}

#[test]
fn text_format_renders_a_readable_report() {
    let out = hw().args(["classify", "--rank", "2", "--format", "text"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(!text.starts_with('{'), "text format must not emit JSON: {text}");
    assert!(text.contains("branch"), "text: {text}");
}
