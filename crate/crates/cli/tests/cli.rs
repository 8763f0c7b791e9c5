use std::path::PathBuf;

use pconj_cli::{run, Output, EXIT_FALSE, EXIT_INPUT, EXIT_OK};
use pconj_core::algebra::text::parse_table;
use pconj_core::enumeration::goldens::Goldens;
use pconj_core::{p_related, CayleyTable};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn pconj(args: &[&str]) -> Output {
    run(std::iter::once("pconj").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = pconj(&full);
    let value: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    assert_eq!(value["exit_status"], out.exit);
    (out.exit, value)
}

#[test]
fn check_left_zero_fixed_n() {
    let (exit, v) = json(&["check", &data("left_zero.txt"), "--n", "2"]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["command"], "check");
    assert_eq!(v["results"]["condition"]["holds"], true);
    assert_eq!(v["results"]["commutative"], false);
    assert_eq!(v["results"]["identity"], Value::Null);
}

#[test]
fn check_symmetric_group_search() {
    let (exit, v) = json(&["check", &data("s3.txt"), "--n-max", "6"]);
    assert_eq!(exit, EXIT_FALSE);
    assert_eq!(v["results"]["condition"]["smallest_n"], Value::Null);
    let (exit, v) = json(&["check", &data("s3.txt"), "--n-max", "7"]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["results"]["condition"]["smallest_n"], 7);
    assert_eq!(v["results"]["identity"], 0);
}

#[test]
fn bad_input_exits_two() {
    let out = pconj(&["check", &data("out_of_range.txt"), "--n", "2"]);
    assert_eq!(out.exit, EXIT_INPUT);
    assert!(out.stderr.contains("OUT_OF_RANGE"), "{}", out.stderr);
    let (exit, v) = json(&["check", &data("out_of_range.txt")]);
    assert_eq!(exit, EXIT_INPUT);
    assert_eq!(v["results"]["error"]["code"], "OUT_OF_RANGE");
    let (_, v) = json(&["classes", &data("not_associative.txt")]);
    assert_eq!(v["results"]["error"]["code"], "NOT_ASSOCIATIVE");
    assert_eq!(pconj(&["classes", "/nonexistent/table.txt"]).exit, EXIT_INPUT);
    assert_eq!(pconj(&["check", &data("left_zero.txt"), "--n", "1"]).exit, EXIT_INPUT);
    assert_eq!(pconj(&["frobnicate"]).exit, EXIT_INPUT);
}

#[test]
fn classes_reports() {
    let (exit, v) = json(&["classes", &data("null2.txt")]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["results"]["classes"], serde_json::json!([[0], [1]]));
    assert_eq!(v["results"]["transitive"], true);

    let (_, v) = json(&["classes", &data("left_zero.txt")]);
    assert_eq!(v["results"]["classes"], serde_json::json!([[0, 1]]));
    assert_eq!(v["results"]["pairs"], serde_json::json!([[0, 1]]));
    assert_eq!(v["results"]["transitive"], true);

    let (_, v) = json(&["classes", &data("trivial.txt")]);
    assert_eq!(v["results"]["classes"], serde_json::json!([[0]]));

    let (_, v) = json(&["classes", &data("nontransitive4.txt")]);
    assert_eq!(v["results"]["transitive"], false);
    assert_eq!(v["results"]["violating_triple"], serde_json::json!([1, 0, 2]));
    let human = pconj(&["classes", &data("nontransitive4.txt")]);
    assert!(human.stdout.contains("~p transitive: false"));
}

#[test]
fn witness_left_zero() {
    let (exit, v) = json(&["witness", &data("left_zero.txt"), "0", "1", "0", "--n", "2"]);
    assert_eq!(exit, EXIT_OK);
    let w = &v["results"]["composition"]["witness"];
    assert_eq!((w["u"].as_u64(), w["v"].as_u64()), (Some(0), Some(0)));
    assert_eq!(v["results"]["composition"]["case"]["kind"], "constructed");
    let human = pconj(&["witness", &data("left_zero.txt"), "0", "1", "0", "--n", "2"]);
    assert!(human.stdout.contains("x = 0, y = 0"));
    assert!(human.stdout.contains("x·y = 0 = a"));
    assert!(human.stdout.contains("y·x = 0 = c"));
}

#[test]
fn witness_passthrough_and_failures() {
    let (exit, v) = json(&["witness", &data("left_zero.txt"), "1", "1", "1", "--n", "3"]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["results"]["composition"]["case"]["kind"], "a_equals_b");

    let (exit, v) = json(&["witness", &data("s3.txt"), "1", "2", "5", "--n", "2"]);
    assert_eq!(exit, EXIT_FALSE);
    assert_eq!(v["results"]["error"]["code"], "CONDITION_VIOLATED");

    let (exit, v) = json(&["witness", &data("s3.txt"), "1", "2", "5", "--n", "7"]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["results"]["checks"][0], "x·y = 1 = a");

    let (exit, v) = json(&["witness", &data("null2.txt"), "0", "1", "1", "--n", "2"]);
    assert_eq!(exit, EXIT_FALSE);
    assert_eq!(v["results"]["error"]["code"], "NO_WITNESS");

    assert_eq!(pconj(&["witness", &data("left_zero.txt"), "0", "5", "0", "--n", "2"]).exit, EXIT_INPUT);
}

#[test]
fn verify_small_orders() {
    let (exit, v) = json(&["verify", "--max-order", "3", "--n-max", "6"]);
    assert_eq!(exit, EXIT_OK);
    let report = &v["results"]["report"];
    assert_eq!(report["transitivity_failures_among_satisfiers"], 0);
    assert_eq!(report["witness_compositions_failed"], 0);
    assert_eq!(v["results"]["goldens"]["matched"], true);

    let (exit, v) = json(&["verify", "--max-order", "1"]);
    assert_eq!(exit, EXIT_OK);
    assert_eq!(v["results"]["report"]["semigroups_enumerated"][0]["count"], 1);

    let (exit, v) = json(&["verify", "--max-order", "99"]);
    assert_eq!(exit, EXIT_INPUT);
    assert_eq!(v["results"]["error"]["code"], "ORDER_CAP_EXCEEDED");
}

#[test]
fn verify_detects_golden_mismatch_and_regenerates() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1, all, 1\n2, all, 6\n").unwrap();
    let (exit, v) = json(&["verify", "--max-order", "2", "--n-max", "2", "--goldens", bad.to_str().unwrap()]);
    assert_eq!(exit, EXIT_FALSE);
    let mismatches = v["results"]["goldens"]["mismatches"].as_array().unwrap();
    assert!(mismatches.iter().any(|m| m["order"] == 2 && m["filter"] == "all" && m["expected"] == 6));

    let fresh = dir.path().join("fresh.txt");
    let out = pconj(&["verify", "--max-order", "3", "--regen-goldens", "--goldens", fresh.to_str().unwrap()]);
    assert_eq!(out.exit, EXIT_OK, "{}", out.stdout);
    let regenerated = Goldens::parse(&std::fs::read_to_string(&fresh).unwrap()).unwrap();
    let committed = Goldens::committed();
    for ((order, filter), count) in &regenerated.counts {
        assert_eq!(committed.count(*order, filter), Some(*count), "{order} {filter}");
    }
    assert_eq!(regenerated.smallest_nontransitive, None);
    assert_eq!(regenerated.nontransitive_searched_bound, Some(3));
}

#[test]
fn find_nontransitive_bounds() {
    for max in ["1", "2"] {
        let (exit, v) = json(&["find-nontransitive", "--max-order", max]);
        assert_eq!(exit, EXIT_OK);
        assert_eq!(v["results"]["none_found"], true);
    }
    let (exit, v) = json(&["find-nontransitive", "--max-order", "5"]);
    assert_eq!(exit, EXIT_OK);
    let examples = v["results"]["examples"].as_array().unwrap();
    assert!(!examples.is_empty());
    for ex in examples {
        let rows: Vec<Vec<usize>> = serde_json::from_value(ex["table"].clone()).unwrap();
        let t = CayleyTable::from_rows(&rows).unwrap();
        let triple: (usize, usize, usize) = serde_json::from_value(ex["triple"].clone()).unwrap();
        assert!(p_related(&t, triple.0, triple.1).is_some());
        assert!(p_related(&t, triple.1, triple.2).is_some());
        assert!(p_related(&t, triple.0, triple.2).is_none());
    }
}

#[test]
fn enumerate_output_reparses() {
    let out = pconj(&["enumerate", "--order", "3"]);
    assert_eq!(out.exit, EXIT_OK);
    let blocks: Vec<&str> = out.stdout.split("# semigroup ").skip(1).collect();
    assert_eq!(blocks.len(), 24);
    for block in blocks {
        // drop the index left on the first line
        let body = block.split_once('\n').unwrap().1;
        parse_table(body).unwrap();
    }
    let (_, v) = json(&["enumerate", "--order", "2", "--labeled"]);
    assert_eq!(v["results"]["count"], 8);
    let (_, v) = json(&["enumerate", "--order", "3", "--filter", "commutative"]);
    assert_eq!(v["results"]["count"], 12);
    let (_, v) = json(&["enumerate", "--order", "3", "--filter", "condition", "--n", "2"]);
    assert_eq!(v["results"]["count"], 22);
}

#[test]
fn json_is_byte_stable_across_runs_and_jobs() {
    let a = pconj(&["--json", "verify", "--max-order", "3", "--jobs", "1"]);
    let b = pconj(&["--json", "verify", "--max-order", "3", "--jobs", "4"]);
    let c = pconj(&["--json", "verify", "--max-order", "3", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let a = pconj(&["--json", "enumerate", "--order", "4", "--jobs", "1"]);
    let b = pconj(&["--json", "enumerate", "--order", "4", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}
