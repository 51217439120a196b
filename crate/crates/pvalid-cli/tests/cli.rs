//! End-to-end checks of the CLI surface: subcommands, exit codes, and the
//! JSON contract.

use std::process::{Command, Output};

fn pvalid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pvalid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(output).trim()).expect("stdout is one JSON document")
}

#[test]
fn count_prints_the_exact_count() {
    let out = pvalid(&["count", "BbaAAaaABbAaAa"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "11");

    let out = pvalid(&["count", "AA"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn count_json_round_trips_the_word() {
    let out = pvalid(&["count", "BbaAAaaABbAaAa", "--m", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["count"], serde_json::json!("11"));
    assert_eq!(doc["m"], serde_json::json!(2));
    let word = doc["word"].as_str().unwrap();
    assert_eq!(word, "BbaAAaaABbAaAa");
    // Counting the re-parsed word field reproduces the same count.
    let again = pvalid(&["count", word]);
    assert_eq!(stdout(&again).trim(), "11");
}

#[test]
fn malformed_words_exit_2_with_positions() {
    let out = pvalid(&["count", "A?"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("position 2"));

    let out = pvalid(&["count", "Ac", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("position 2"));

    let out = pvalid(&["count", "+0,-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("entry 1"));
}

#[test]
fn usage_errors_exit_2() {
    let out = pvalid(&["count"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pvalid(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pvalid(&["count", "Aa", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_matchings_and_respects_limits() {
    let out = pvalid(&["enumerate", "AaAa"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(1,2)(3,4)\n(1,4)(2,3)\n");

    let out = pvalid(&["enumerate", "BbaAAaaABbAaAa", "--limit", "3", "--format", "json"]);
    let doc = json(&out);
    assert_eq!(doc["count"], serde_json::json!("11"));
    assert_eq!(doc["matchings"].as_array().unwrap().len(), 3);
    assert_eq!(doc["truncated"], serde_json::json!(true));
}

#[test]
fn family_emits_word_and_both_counts() {
    let out = pvalid(&["family", "--k", "5", "--l", "5", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["word"], serde_json::json!("AAAAAaaaaaAAAAAaaaaa"));
    assert_eq!(doc["count"], serde_json::json!("6"));
    assert_eq!(doc["closed_form"], serde_json::json!("6"));

    let out = pvalid(&["family", "--k", "0", "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn insert_reports_position_and_counts() {
    let out = pvalid(&["insert", "aA", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["result"], serde_json::json!("aaAA"));
    assert_eq!(doc["position"], serde_json::json!(2));
    assert_eq!(doc["count_before"], serde_json::json!("1"));
    assert_eq!(doc["count_after"], serde_json::json!("1"));

    // Unbalanced base is an error.
    let out = pvalid(&["insert", "AAa"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unbalanced"));

    // Explicit base as a letter.
    let out = pvalid(&["insert", "Aa", "--base", "B", "--format", "json"]);
    let doc = json(&out);
    assert_eq!(doc["result"], serde_json::json!("bBAa"));
}

#[test]
fn survey_emits_all_three_formats() {
    let out = pvalid(&["survey", "--n", "2", "--m", "1", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["scanned"], serde_json::json!("16"));
    assert_eq!(doc["zero_count"], serde_json::json!("10"));
    assert_eq!(doc["histogram"]["1"], serde_json::json!("4"));
    assert_eq!(doc["histogram"]["2"], serde_json::json!("2"));
    assert_eq!(doc["realizable"], serde_json::json!(["1", "2"]));

    let out = pvalid(&["survey", "--n", "2", "--m", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "k,words\n1,4\n2,2\n");

    let out = pvalid(&["survey", "--n", "2", "--m", "1"]);
    assert!(stdout(&out).contains("realizable: {1, 2}"));
}

#[test]
fn survey_budget_refusal_names_the_cost() {
    let out = pvalid(&["survey", "--n", "3", "--m", "2", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4096"));

    let out = pvalid(&["survey", "--n", "3", "--m", "2", "--budget", "10", "--force"]);
    assert!(out.status.success());
}

#[test]
fn survey_checkpoint_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let journal = dir.path().join("scan.journal");
    let journal = journal.to_str().unwrap();
    let args = ["survey", "--n", "3", "--m", "1", "--checkpoint", journal, "--chunk-size", "16", "--format", "json"];
    let first = pvalid(&args);
    assert!(first.status.success());
    let second = pvalid(&args);
    assert_eq!(json(&first), json(&second));
}

#[test]
fn witnesses_lists_words_in_order() {
    let out = pvalid(&["witnesses", "--n", "2", "--m", "1", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "AaAa\naAaA\n");

    let out = pvalid(&["witnesses", "--n", "1", "--m", "1", "--k", "2", "--format", "json"]);
    let doc = json(&out);
    assert_eq!(doc["witnesses"], serde_json::json!([]));
}

#[test]
fn verify_counterexample_passes_with_three_checks() {
    let out = pvalid(&["verify", "--suite", "counterexample"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("[pass]").count(), 3);
    assert!(text.contains("verify: pass"));
}

#[test]
fn verify_all_aggregates_the_suites() {
    let out = pvalid(&["verify", "--suite", "all", "--format", "json"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["passed"], serde_json::json!(true));
    assert_eq!(doc["counterexample"]["passed"], serde_json::json!(true));
    assert_eq!(doc["family"]["passed"], serde_json::json!(true));
    assert_eq!(doc["monotone"].as_array().unwrap().len(), 5);
}

#[test]
fn numeric_words_are_accepted() {
    let out = pvalid(&["count", "+1,-1,+2,-2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = pvalid(&["count", "+1,-1,+1,-1"]);
    assert_eq!(stdout(&out).trim(), "2");
}
