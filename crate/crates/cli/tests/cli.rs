//! End-to-end checks of the binary: documented examples, output formats,
//! determinism, and exit codes.

use std::process::{Command, Output};

fn altacyclic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altacyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = altacyclic(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn encode_and_decode_worked_example() {
    assert_eq!(
        stdout_of(&["encode", "ds", "--perm", "6 1 5 3 4 2"]).trim(),
        "5 4 4 6 6 6"
    );
    assert_eq!(
        stdout_of(&["decode", "ds", "--f", "5 4 4 6 6 6"]).trim(),
        "6 1 5 3 4 2"
    );
}

#[test]
fn count_methods_agree() {
    assert_eq!(
        stdout_of(&["count", "alt-acyclic", "--n", "4", "--method", "brute"]).trim(),
        "56"
    );
    assert_eq!(
        stdout_of(&["count", "alt-acyclic", "--n", "4", "--method", "formula"]).trim(),
        "56"
    );
    let json = stdout_of(&[
        "count",
        "semiacyclic",
        "--n",
        "5",
        "--method",
        "formula",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["count"], "246");
}

#[test]
fn count_is_deterministic_across_thread_counts() {
    let a = stdout_of(&["count", "alt-acyclic", "--n", "5", "--threads", "1"]);
    let b = stdout_of(&["count", "alt-acyclic", "--n", "5", "--threads", "4"]);
    assert_eq!(a, b);
    assert_eq!(a.trim(), "608");
}

#[test]
fn table_formats() {
    let plain = stdout_of(&["table", "anij", "--n", "4", "--normalized"]);
    assert!(plain.contains("11"));
    let csv = stdout_of(&[
        "table",
        "anij",
        "--n",
        "4",
        "--normalized",
        "--format",
        "csv",
    ]);
    assert!(csv.starts_with("j/i,1,2,3,4\n"));
    assert!(csv.contains("2,5,11,,\n"));
    let json = stdout_of(&["table", "anij", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["cells"][0]["value"], "2");
}

#[test]
fn sequences() {
    assert_eq!(
        stdout_of(&["seq", "median", "--terms", "6"]).trim(),
        "1 2 8 56 608 9440"
    );
    assert_eq!(
        stdout_of(&["seq", "first", "--terms", "5"]).trim(),
        "1 1 3 17 155"
    );
    assert_eq!(
        stdout_of(&["seq", "normalized", "--terms", "5"]).trim(),
        "1 2 7 38 295"
    );
    assert_eq!(
        stdout_of(&["seq", "semiacyclic", "--terms", "5"]).trim(),
        "1 2 7 36 246"
    );
    assert_eq!(
        stdout_of(&["seq", "eulerian", "--n", "4"]).trim(),
        "1 11 11 1"
    );
}

#[test]
fn classify_and_lmax_round_trip() {
    let tournament = r#"{"n":6,"ascents":[[2,3],[2,4],[2,6],[3,6],[5,6]]}"#;
    let classified = stdout_of(&["classify", "--json", tournament, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&classified).unwrap();
    assert_eq!(v["alt_acyclic"], "true");
    assert_eq!(v["ascending"], "false");

    let code = stdout_of(&["lmax", "--json", tournament, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&code).unwrap();
    assert_eq!(v["pi"], serde_json::json!([1, 2, 5, 3, 4, 6]));
    assert_eq!(v["p"], serde_json::json!([0, 3, 6, 0, 6, 0]));

    let reduced = stdout_of(&["reduce", "--json", &code, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&reduced).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["p"], serde_json::json!([0, 3, 0, 0, 0]));
}

#[test]
fn classify_accepts_hex() {
    let out = stdout_of(&["classify", "--hex", "00", "--n", "4"]);
    assert!(out.contains("alt_acyclic: true"));
    assert!(out.contains("type: (4,4,0)"));
}

#[test]
fn models_emit_json_lines() {
    let lines = stdout_of(&["model", "nm", "--n", "3"]);
    assert_eq!(lines.lines().count(), 7);
    for line in lines.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["sets"].is_array());
    }
    assert_eq!(
        stdout_of(&["model", "pairvec", "--n", "4", "--count-only"]).trim(),
        "56"
    );
    assert_eq!(
        stdout_of(&[
            "model",
            "median",
            "--n",
            "4",
            "--count-only",
            "--fix-i",
            "1"
        ])
        .trim(),
        "17"
    );
}

#[test]
fn arrangement_commands() {
    let coeffs = stdout_of(&["charpoly", "--n", "2", "--format", "json"]);
    assert_eq!(coeffs.trim(), r#"["0","0","0","-1","1"]"#);
    assert_eq!(stdout_of(&["regions", "--n", "5"]).trim(), "608");
    assert_eq!(
        stdout_of(&["pointcount", "--n", "2", "--q", "5"]).trim(),
        "500"
    );
}

#[test]
fn series_commands() {
    assert_eq!(
        stdout_of(&["series", "median", "--terms", "4", "--format", "json"]).trim(),
        r#"["1","2","8","56"]"#
    );
    let alpha = stdout_of(&["series", "alpha", "--n", "4", "--format", "csv"]);
    assert!(alpha.contains("2,2,11\n"));
}

#[test]
fn verify_passes_and_reports() {
    let out = altacyclic(&["verify", "--max-n", "3", "--samples", "100"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("1..13\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 13);
    assert!(text.contains("13 passed, 0 failed"));

    let json = stdout_of(&[
        "verify",
        "--max-n",
        "3",
        "--samples",
        "100",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 13);
}

#[test]
fn bad_input_exits_with_usage_code() {
    let out = altacyclic(&["classify", "--json", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = altacyclic(&["count", "alt-acyclic", "--n", "12"]);
    assert_eq!(out.status.code(), Some(2));
    let out = altacyclic(&["decode", "ds", "--f", "1 1 1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = altacyclic(&["pointcount", "--n", "3", "--q", "9"]);
    assert_eq!(out.status.code(), Some(2));
    // clap usage errors also exit 2
    let out = altacyclic(&["count", "nonsense", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
