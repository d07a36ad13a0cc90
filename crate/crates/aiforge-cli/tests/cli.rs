//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

use aiforge_cli::record::{CertifyRecord, FunctionRecord};

fn aiforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aiforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_first_and_last_table_rows() {
    let out = aiforge(&[
        "construct",
        "--k",
        "6",
        "--d",
        "6",
        "--m",
        "000",
        "--free",
        "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "000 0000000111111\n");

    let out = aiforge(&[
        "construct",
        "--k",
        "6",
        "--d",
        "6",
        "--m",
        "111",
        "--free",
        "1",
    ]);
    assert_eq!(stdout(&out), "111 1111111000000\n");
}

#[test]
fn construct_defaults_and_free_index_agree() {
    let a = aiforge(&["construct", "--k", "6", "--d", "6"]);
    let b = aiforge(&[
        "construct",
        "--k",
        "6",
        "--d",
        "6",
        "--m",
        "000",
        "--free-index",
        "0",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn construct_rejects_invalid_pair() {
    let out = aiforge(&["construct", "--k", "6", "--d", "5"]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("not a binary suffix"),
        "{}",
        stderr(&out)
    );
    assert_eq!(stdout(&out), "");

    let out = aiforge(&["construct", "--k", "6", "--d", "1"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("2 <= d <= k"), "{}", stderr(&out));
}

#[test]
fn transform_both_directions() {
    let out = aiforge(&["transform", "--svv", "0000000111111"]);
    assert_eq!(stdout(&out), "svv 0000000111111\nsanf 0000000110000\n");

    let out = aiforge(&["transform", "--sanf", "1000000110000"]);
    assert_eq!(stdout(&out), "svv 1111111000000\nsanf 1000000110000\n");

    let out = aiforge(&["transform", "--svv", "00"]);
    assert_eq!(stdout(&out), "svv 00\nsanf 00\n");
}

#[test]
fn transform_rejects_malformed_input() {
    let out = aiforge(&["transform", "--svv", "01x0"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("invalid character"));

    // Exactly one of --svv/--sanf is required.
    let out = aiforge(&["transform"]);
    assert!(!out.status.success());
    let out = aiforge(&["transform", "--svv", "01", "--sanf", "01"]);
    assert!(!out.status.success());
}

#[test]
fn ai_on_table_rows() {
    let out = aiforge(&["ai", "--svv", "0010000111011"]);
    assert_eq!(stdout(&out), "ai 6\n");
    let out = aiforge(&["ai", "--svv", "0101011010101"]);
    assert_eq!(stdout(&out), "ai 6\n");
    let out = aiforge(&["ai", "--svv", "000"]);
    assert_eq!(stdout(&out), "ai 0\n");
}

#[test]
fn ai_witness_masks_annihilate_the_function() {
    let out = aiforge(&["ai", "--svv", "0011", "--witness", "--json"]);
    assert!(out.status.success());
    let rec: FunctionRecord = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec.ai_kind.as_deref(), Some("exact"));
    let masks = rec.witness.expect("witness requested");
    assert!(!masks.is_empty());
    let ai = rec.ai.unwrap();
    assert!(masks.iter().all(|m| m.count_ones() as usize <= ai));
}

#[test]
fn ai_redirects_oversized_inputs_to_certify() {
    let svv: String = "0".repeat(26);
    let out = aiforge(&["ai", "--svv", &svv]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("certify"), "{}", stderr(&out));
}

#[test]
fn certify_small_instances() {
    let out = aiforge(&["certify", "--svv", "0000000111111", "--d", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("certified true\n"), "{text}");

    let out = aiforge(&["certify", "--svv", "000", "--d", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("certified false\n"));

    let out = aiforge(&["certify", "--svv", "00000", "--d", "3"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("n/2"));
}

#[test]
fn certify_agrees_with_exact_search() {
    for svv in ["0000000111111", "1010101101010", "0101010010101"] {
        let cert = aiforge(&["certify", "--svv", svv, "--d", "6", "--json"]);
        let cert: CertifyRecord = serde_json::from_str(stdout(&cert).trim()).unwrap();
        let exact = aiforge(&["ai", "--svv", svv, "--json"]);
        let exact: FunctionRecord = serde_json::from_str(stdout(&exact).trim()).unwrap();
        if cert.certified {
            assert!(exact.ai.unwrap() >= cert.d);
        }
    }
}

#[test]
fn enumerate_small_family_with_verification() {
    let out = aiforge(&["enumerate", "--k", "2", "--d", "2", "--verify-ai"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    for line in &lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let ai: usize = fields[3].parse().unwrap();
        assert!(ai >= 2, "{line}");
    }
}

#[test]
fn enumerate_limit_and_count_only() {
    let out = aiforge(&["enumerate", "--k", "6", "--d", "6", "--limit", "3"]);
    assert_eq!(stdout(&out).lines().count(), 3);

    let out = aiforge(&["enumerate", "--k", "13", "--d", "5", "--count-only"]);
    assert_eq!(stdout(&out), "1048576\n");
}

#[test]
fn enumerate_rejects_verify_ai_above_bound() {
    let out = aiforge(&["enumerate", "--k", "13", "--d", "5", "--verify-ai"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("n <= 14"));
}

#[test]
fn json_records_round_trip_byte_identically() {
    let out = aiforge(&["enumerate", "--k", "6", "--d", "6", "--json"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let rec: FunctionRecord = serde_json::from_str(line).unwrap();
        assert_eq!(rec.to_json(), line);
        assert_eq!(rec.n, 12);
        assert_eq!(rec.svv.len(), 13);
    }

    let out = aiforge(&["certify", "--svv", "0000000111111", "--d", "6", "--json"]);
    let line = stdout(&out);
    let rec: CertifyRecord = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(rec.to_json(), line.trim());
}

#[test]
fn verify_table_golden_runs() {
    let out = aiforge(&["verify-table", "--table", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS 16/16 rows\n");

    let out = aiforge(&["verify-table", "--table", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS 8/8 patterns\n");

    let out = aiforge(&["verify-table", "--table", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_results() {
    let sequential = Command::new(env!("CARGO_BIN_EXE_aiforge"))
        .args(["certify", "--svv", "0000000111111", "--d", "6", "--json"])
        .env("AIFORGE_THREADS", "1")
        .output()
        .expect("binary runs");
    let parallel = aiforge(&["certify", "--svv", "0000000111111", "--d", "6", "--json"]);
    assert_eq!(sequential.stdout, parallel.stdout);
}
