//! End-to-end tests of the qcong binary: exit codes, output formats, and
//! the environment override for the worker pool.

use std::process::{Command, Output};

fn qcong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(args)
        .output()
        .expect("spawn qcong")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn verify_filtered_json_passes() {
    let out = qcong(&[
        "verify",
        "--check",
        "depth1.andrews*",
        "--primes",
        "3,5,7",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let records = parsed.as_array().unwrap();
    assert_eq!(records.len(), 6); // two Andrews checks at three primes
    for record in records {
        assert_eq!(record["status"], "pass");
        assert!(record["check_id"].as_str().unwrap().starts_with("depth1.andrews"));
        assert!(record["elapsed_ms"].is_number());
        assert!(record["lhs"].is_string() && record["rhs"].is_string());
        assert!(record["params"]["p"].is_i64());
    }
}

#[test]
fn verify_csv_has_flat_columns() {
    let out = qcong(&[
        "verify",
        "--check",
        "zhao.ones",
        "--primes",
        "5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,params,status,lhs,rhs,elapsed_ms"
    );
    let first = lines.next().unwrap();
    assert!(first.starts_with("zhao.ones,"));
    assert!(first.contains("pass"));
}

#[test]
fn conjecture_single_cell() {
    let out = qcong(&[
        "conjecture", "--family", "CG12", "--t", "2", "--d", "1,0,1", "--prime", "11",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("pass conj.cg12"));
    assert!(text.contains("1/1 passed"));
}

#[test]
fn conjecture_constant_is_reported() {
    let out = qcong(&[
        "conjecture", "--family", "cg23", "--t", "1", "--d", "0,0", "--prime", "7",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("N(p=7, r=3, t=1, d=[0, 0]) = 28"), "{text}");
}

#[test]
fn table_kn_rows() {
    let out = qcong(&["table", "kn", "--prime", "7", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("K_0(7) = -1"));
    assert!(text.contains("K_5(7) = 4"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn table_n_sweep_csv() {
    let out = qcong(&[
        "table", "n", "--max-r", "5", "--primes", "7,11", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().next().unwrap(), "p,r,t,d,value");
    assert!(text.contains("7,3,1,0;0,28"));
}

#[test]
fn usage_errors_exit_two() {
    // unknown flag
    let out = qcong(&["verify", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    // composite prime
    let out = qcong(&["verify", "--primes", "9"]);
    assert_eq!(out.status.code(), Some(2));
    // bad family
    let out = qcong(&["conjecture", "--family", "cg99"]);
    assert_eq!(out.status.code(), Some(2));
    // block vector length mismatch
    let out = qcong(&["conjecture", "--family", "cg12", "--t", "2", "--d", "1,0", "--prime", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn workers_env_override_keeps_order() {
    let base = qcong(&["verify", "--check", "homog.h2", "--primes", "5,7", "--format", "csv"]);
    let threaded = Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(["verify", "--check", "homog.h2", "--primes", "5,7", "--format", "csv"])
        .env("QCONG_WORKERS", "4")
        .output()
        .expect("spawn qcong");
    assert!(base.status.success() && threaded.status.success());
    let strip_ms = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
            .collect()
    };
    assert_eq!(strip_ms(&stdout_of(&base)), strip_ms(&stdout_of(&threaded)));
}
