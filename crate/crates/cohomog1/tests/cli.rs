//! End-to-end checks of the `cohomog1` binary: exit codes, headline output
//! lines, strict input parsing, and byte-for-byte deterministic JSON.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohomog1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("cohomog1-cli-it");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write temp input");
    path
}

#[test]
fn report_prints_the_poincare_polynomial() {
    let out = run(&["report", "--catalog", "so(2n+1)-line5-n2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("P(M) = 1 + t^2 + 2t^4 + t^6 + t^8"), "{text}");
    assert!(text.contains("chi(M) = 6"), "{text}");
    assert!(text.contains("equivariantly formal: yes"), "{text}");
}

#[test]
fn report_prints_the_odd_case_dimension() {
    let out = run(&["report", "--catalog", "N7I"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dim H*(M) = 4"), "{text}");
    assert!(text.contains("|W| = 2"), "{text}");
}

#[test]
fn unknown_catalog_name_exits_one() {
    let out = run(&["report", "--catalog", "no-such-diagram"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("unknown catalog entry"),
        "{}",
        stderr(&out)
    );
    assert!(stdout(&out).is_empty());
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let out = run(&["report"]);
    assert_eq!(out.status.code(), Some(1), "an input source is required");

    let out = run(&["report", "--catalog", "N7G", "--input", "also-a-file.json"]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "--input conflicts with --catalog"
    );

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for subcommand in ["report", "catalog", "ring", "series"] {
        assert!(text.contains(subcommand), "{text}");
    }
}

#[test]
fn invalid_diagram_reports_violations_and_exits_two() {
    let path = write_temp(
        "invalid-rank.json",
        r#"{"schema":"1","orbit_space":"interval","G":"A2","K-":"A1+T1","K+":"A1+T1","H":"T3"}"#,
    );
    let out = run(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("validation: FAILED"), "{text}");
    assert!(text.contains("violation ["), "{text}");
}

#[test]
fn unknown_json_fields_are_rejected() {
    let path = write_temp(
        "extra-field.json",
        r#"{"orbit_space":"interval","G":"A2","K-":"A1+T1","K+":"A1+T1","H":"T2","surprise":1}"#,
    );
    let out = run(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}

#[test]
fn inconsistent_weyl_order_exits_three() {
    // chi(G/H) = 6, so |W| = 4 would force dim H*(M) = 3, which is odd.
    let path = write_temp(
        "bad-weyl.json",
        r#"{"orbit_space":"interval","G":"A2","K-":"A1+T1","K+":"A1+T1","H":"T2","weyl_order":4}"#,
    );
    let out = run(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn ring_requires_family_data_and_reports_presentations() {
    let out = run(&["ring", "--catalog", "N7I"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["ring", "--catalog", "u3-M1", "--monomial-order", "lex"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("monomial order: lex"), "{text}");
    assert!(
        text.contains("ordinary Hilbert series: 1 + 3t^2 + 4t^4 + 3t^6 + t^8"),
        "{text}"
    );
    assert!(
        text.contains("square-zero class in degree 2: none exists"),
        "{text}"
    );
}

#[test]
fn series_respects_the_degree_bound() {
    let out = run(&[
        "series",
        "--catalog",
        "so(2n+1)-line5-n2",
        "--degree-bound",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("classifying series of G = B2: 1 / (1-t^4)(1-t^8)"),
        "{text}"
    );
    assert!(
        text.contains("taylor through degree 8: 1, 0, 0, 0, 1, 0, 0, 0, 2"),
        "{text}"
    );
    assert!(
        text.contains("equivariant Hilbert series: (1 + t^2 + t^4) / (1-t^4)^2"),
        "{text}"
    );
}

#[test]
fn json_output_is_deterministic_and_versioned() {
    for args in [
        vec!["report", "--catalog", "u3-M2", "--format", "json"],
        vec!["catalog", "--format", "json"],
        vec!["ring", "--catalog", "u3-M2", "--format", "json"],
        vec!["series", "--catalog", "N7G", "--format", "json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}: {}", stderr(&first));
        assert_eq!(first.stdout, second.stdout, "{args:?} must be reproducible");

        let value: serde_json::Value =
            serde_json::from_slice(&first.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(value["schema"], "1", "{args:?}");
    }
}

#[test]
fn ring_json_carries_the_square_zero_verdict() {
    let out = run(&["ring", "--catalog", "u3-M2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["square_zero_degree2"]["status"], "found");
    assert_eq!(value["square_zero_degree2"]["witness"], "u");
    assert_eq!(value["ordinary"]["graded_dimensions"][2], 3);

    let out = run(&["ring", "--catalog", "u3-M1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["square_zero_degree2"]["status"], "none");
    assert_eq!(
        value["square_zero_degree2"]["witness"],
        serde_json::Value::Null
    );
}
