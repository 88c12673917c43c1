//! End-to-end tests of the `monogen` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

#[test]
fn analyze_monogenic_cyclic_sextic() {
    let out = run(&["analyze", "--json", "x^6-7x^4+14x^2-7"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["monogenic"]["status"], "Monogenic");
    assert_eq!(v["monogenic"]["failing_prime"], Value::Null);
    assert_eq!(v["galois"]["group"], "C6");
    assert_eq!(v["galois"]["certainty"], "proved");
    assert_eq!(v["irreducible"], true);
    assert_eq!(v["remark_match"]["d"], 7);
}

#[test]
fn analyze_non_monogenic_witness() {
    let out = run(&["analyze", "--json", "x^6+21x^4+35x^2+7"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["monogenic"]["status"], "NotMonogenic");
    assert_eq!(v["monogenic"]["failing_prime"], "2");
    assert_eq!(v["galois"]["group"], "C6");
    assert_eq!(v["galois"]["certainty"], "proved");
}

#[test]
fn analyze_quadratic_has_no_galois_field() {
    let out = run(&["analyze", "--json", "x^2+1"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["galois"], Value::Null);
    assert_eq!(v["shape_params"], Value::Null);
    assert_eq!(v["monogenic"]["status"], "Monogenic");
    assert_eq!(v["disc"], "-4");
}

#[test]
fn analyze_human_output() {
    let out = run(&["analyze", "x^6-7x^4+14x^2-7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("galois: C6 (proved)"));
    assert!(text.contains("monogenic: Monogenic"));
    assert!(text.contains("discriminant: 1075648 = 2^6 * 7^5"));
}

#[test]
fn analyze_accepts_bracket_lists() {
    let a = run(&["analyze", "--json", "[-7,0,14,0,-7,0,1]"]);
    let b = run(&["analyze", "--json", "x^6-7x^4+14x^2-7"]);
    let (va, vb) = (&json_lines(&a)[0], &json_lines(&b)[0]);
    assert_eq!(va["input"]["coeffs"], vb["input"]["coeffs"]);
    assert_eq!(va["disc"], vb["disc"]);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["analyze", "x^^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 2"));
    assert!(stdout(&out).is_empty());

    assert_eq!(run(&["analyze", "42"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--box", "5,5"]).status.code(), Some(2));
    assert_eq!(
        run(&["search", "--box", "5,5,5", "--group", "Q8"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "--box", "2,2,2", "--shape", "2,2,2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn search_box_finds_the_six_cyclic_hits() {
    let out = run(&["search", "--box", "15,15,15", "--group", "C6", "--monogenic"]);
    assert!(out.status.success());
    let recs = json_lines(&out);
    let texts: Vec<&str> = recs
        .iter()
        .map(|v| v["input"]["text"].as_str().unwrap())
        .collect();
    assert_eq!(
        texts,
        [
            "x^6-7x^4+14x^2-7",
            "x^6-6x^4+9x^2-3",
            "x^6+5x^4+6x^2+1",
            "x^6+6x^4+5x^2+1",
            "x^6+6x^4+9x^2+1",
            "x^6+9x^4+6x^2+1",
        ]
    );
    for v in &recs {
        assert_eq!(v["monogenic"]["status"], "Monogenic");
        assert_eq!(v["galois"]["group"], "C6");
        assert_eq!(v["timing_ms"], 0);
    }
}

#[test]
fn search_shape_mode_agrees() {
    let out = run(&["search", "--shape", "10,10,10", "--group", "C6", "--monogenic"]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out).len(), 6);
}

#[test]
fn search_s3_monogenic_is_empty() {
    let out = run(&["search", "--box", "10,10,10", "--group", "S3", "--monogenic"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
}

#[test]
fn search_csv_has_header_and_rows() {
    let out = run(&[
        "search", "--box", "15,15,15", "--group", "C6", "--monogenic", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "input_text,coeffs,degree,disc,disc_factorization,irreducible,galois_group,\
         galois_certainty,monogenic_status,failing_prime,shape_params,remark_match,timing_ms"
    );
    assert_eq!(lines.count(), 6);
}

#[test]
fn search_out_writes_the_stdout_bytes() {
    let path = std::env::temp_dir().join("monogen-cli-out-test.jsonl");
    let direct = run(&["search", "--box", "12,12,12", "--group", "C6", "--monogenic"]);
    let filed = run(&[
        "search",
        "--box",
        "12,12,12",
        "--group",
        "C6",
        "--monogenic",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(filed.status.success());
    assert!(stdout(&filed).is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_passes_and_prints_witness_lines() {
    let out = run(&["verify", "thm1.1", "--bound", "15"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(-7, 14, -7)"));
    assert!(text.trim_end().ends_with("PASS: thm1.1"));

    let out = run(&["verify", "thm4.1", "--max-b", "60"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("8 qualifying parameters up to 60"));
}

#[test]
fn cyclo_examples() {
    let out = run(&["cyclo", "--d", "7", "--shift", "+2", "--negate"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x^3-7x^2+14x-7\n");

    let out = run(&["cyclo", "--d", "5", "--shift", "0"]);
    assert_eq!(stdout(&out), "x^2+x-1\n");

    let out = run(&["cyclo", "--d", "12", "--shift", "-2"]);
    assert!(out.status.success());

    let out = run(&["cyclo", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("conductor"));
}
