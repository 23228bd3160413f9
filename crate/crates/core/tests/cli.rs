use std::fs;
use std::process::{Command, Output};

fn missint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_missint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = missint(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_value(text: &str, n: usize) -> String {
    text.lines()
        .skip(1)
        .find_map(|l| l.strip_prefix(&format!("{n},")).map(str::to_string))
        .unwrap()
}

#[test]
fn table_rows() {
    let out = stdout_ok(&["table", "--nmax", "8"]);
    assert!(out.starts_with("n,m,count\n"));
    assert!(out.lines().any(|l| l == "7,1,4"));
    assert!(out.lines().any(|l| l == "5,1,2"));
    let over = stdout_ok(&["table", "--family", "overpartitions", "--nmax", "5"]);
    assert!(over.lines().any(|l| l == "4,1,6"));
    let closed = stdout_ok(&["table", "--family", "overpartitions", "--nmax", "5", "--closed"]);
    assert_eq!(over, closed);
}

#[test]
fn table_of_order_zero() {
    assert_eq!(stdout_ok(&["table", "--nmax", "0"]), "n,m,count\n0,0,1\n");
    assert_eq!(
        stdout_ok(&["table", "--nmax", "0", "--format", "json"]),
        "[\n  {\"n\":0,\"m\":0,\"count\":1}\n]\n"
    );
}

#[test]
fn series_values() {
    let gapfree = stdout_ok(&["series", "gapfree", "--family", "overpartitions", "--nmax", "6"]);
    assert_eq!(csv_value(&gapfree, 5), "10");
    let nu = stdout_ok(&["series", "nu-d-lt-k", "--k", "2", "--nmax", "6"]);
    assert_eq!(csv_value(&nu, 4), "9");
    let total = stdout_ok(&["series", "total", "--nmax", "100"]);
    assert_eq!(csv_value(&total, 100), "190569292");
}

#[test]
fn formats_agree() {
    let args = ["series", "parity-diff", "--nmax", "40"];
    let csv = stdout_ok(&[&args[..], &["--format", "csv"]].concat());
    let bfile = stdout_ok(&[&args[..], &["--format", "bfile"]].concat());
    let json = stdout_ok(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(stdout_ok(&["oeis", "parity-diff", "--nmax", "40"]), bfile);

    let from_csv: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let from_bfile: Vec<String> = bfile
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let from_json: Vec<String> = parsed["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    assert_eq!(from_csv.len(), 41);
    assert_eq!(from_csv, from_bfile);
    assert_eq!(from_csv, from_json);
    assert_eq!(parsed["family"], "partitions");
}

#[test]
fn verify_exit_codes() {
    let out = missint(&["verify", "mod3", "--nmax", "300", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["elapsed_ms"], 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));

    let out = missint(&[
        "verify",
        "crosscheck-table",
        "--j",
        "2",
        "--nmax",
        "22",
        "--threads",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_reports_witnesses() {
    let out = stdout_ok(&[
        "scan",
        "bias",
        "--family",
        "overpartitions",
        "--nmax",
        "1000",
        "--threads",
        "0",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ns: Vec<u64> = report["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, [2, 4, 11, 13, 26]);
    assert!(report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let path_str = path.to_str().unwrap();
    let out = missint(&["table", "--nmax", "6", "--output", path_str]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout_ok(&["table", "--nmax", "6"]));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn invalid_invocations() {
    for args in [
        &["series", "unknown-name", "--nmax", "4"][..],
        &["table", "--j", "0", "--nmax", "4"],
        &["table", "--nmax", "-3"],
        &["verify", "trivariate", "--k", "0", "--nmax", "5"],
        &["scan", "bias"],
    ] {
        let out = missint(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}
