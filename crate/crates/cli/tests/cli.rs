use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega-lyndon")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v: Value = serde_json::from_str(&stdout(&out)).expect("one JSON object on stdout");
    (v, out.status.code().unwrap())
}

#[test]
fn factorizes_the_alternating_example() {
    let out = run(&["factorize", "ababab", "--order", "ab,ba"]);
    assert_eq!(stdout(&out), "ab·ab·ab\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rejects_abbab_with_its_suffix_witness() {
    let (v, code) = json(&["is-lyndon", "abbab", "--order", "ab,ba"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["is_lyndon"], false);
    assert_eq!(v["result"]["witness"]["suffix"], "ab");
    assert_eq!(v["result"]["witness"]["offset"], 3);

    let (v, code) = json(&["is-lyndon", "abba", "--order", "ab,ba"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["witness"], Value::Null);
}

#[test]
fn infinite_lyndon_test_accepts_periodic_literals() {
    let (v, code) = json(&["is-lyndon", "(ab)", "--order", "ab,ba"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["witness"]["suffix"], "(ab)");
    let (_, code) = json(&["is-lyndon", "a(b)", "--order", "ab,ba"]);
    assert_eq!(code, 0);
}

#[test]
fn factorizes_ba_omega_with_a_certificate() {
    let (v, code) = json(&["factorize-inf", "(ba)", "--order", "ab,ba"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "result", "certificate"]);
    assert_eq!(v["command"], "factorize-inf");
    assert_eq!(v["result"]["shape"], "InfiniteShape");
    assert_eq!(v["result"]["head"], serde_json::json!(["b"]));
    assert_eq!(v["result"]["repeating"], "ab");
    assert_eq!(v["certificate"]["all_passed"], true);
}

#[test]
fn finite_shape_reports_a_tail() {
    let (v, code) = json(&["factorize-inf", "ba(b)", "--order", "ab"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["shape"], "FiniteShape");
    assert_eq!(v["result"]["tail"], "a(b)");
    assert_eq!(v["result"]["head"], serde_json::json!(["b"]));
}

#[test]
fn compares_infinite_words_and_omega_powers() {
    let (v, code) = json(&["compare", "abba(a)", "(b)", "--order", "ab,ba"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ordering"], "Less");
    assert_eq!(v["result"]["first_mismatch"], 1);
    let (v, _) = json(&["omega-compare", "ab", "abab", "--order", "ab,ba"]);
    assert_eq!(v["result"]["ordering"], "Equal");
    assert_eq!(v["result"]["first_mismatch"], Value::Null);
}

#[test]
fn parse_errors_exit_2_with_a_position() {
    let out = run(&["compare", "ab(ba", "(b)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 5"), "{err}");
    assert!(err.contains("  ab(ba\n       ^"), "{err}");

    let (v, code) = json(&["factorize", "abc", "--order", "ab"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["literal"], "ab");
    assert_eq!(v["error"]["position"], 0);
}

#[test]
fn precondition_failures_exit_2() {
    assert_eq!(run(&["extend", "abab", "--order", "ab"]).status.code(), Some(2));
    assert_eq!(run(&["boundaries", "abab", "--n-max", "3"]).status.code(), Some(2));
    assert_eq!(run(&["minimal-factor", "(ab)", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["oracle-check", "--max-len", "17"]).status.code(), Some(2));
    assert_eq!(run(&["factorize-inf", "(ab)", "--cap", "0"]).status.code(), Some(2));
}

#[test]
fn cap_errors_exit_3() {
    let (v, code) = json(&["classify", "bb(ba)", "--cap", "2", "--order", "ab"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "cap-too-small");
}

#[test]
fn printed_literals_reparse_to_the_same_value() {
    for (lit, order) in [("abab(ab)", "ab,ba"), ("bba(ab)", "ab"), ("aab(aab)", "ba,ab"), ("ab(bbb)", "ab|ba,ab")] {
        let (first, _) = json(&["factorize-inf", lit, "--order", order]);
        let canonical = first["result"]["word"].as_str().unwrap();
        let (second, _) = json(&["factorize-inf", canonical, "--order", order]);
        assert_eq!(second["result"], first["result"], "{lit}");
        assert_eq!(second["inputs"]["order"], order);
        if let Some(tail) = first["result"]["tail"].as_str() {
            let (again, _) = json(&["compare", tail, tail, "--order", order]);
            assert_eq!(again["result"]["x"], tail);
        }
    }
    let (ext, _) = json(&["extend", "abba", "--order", "ab,ba"]);
    let ext = ext["result"]["extension"].as_str().unwrap().to_string();
    let (v, code) = json(&["is-lyndon", &ext, "--order", "ab,ba"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["word"], ext.as_str());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        &["validate-order", "--order", "ab|ba,ab", "--seed", "7", "--json"][..],
        &["oracle-check", "--max-len", "6", "--seed", "3", "--json"][..],
        &["boundaries", "abaababaab", "--n-max", "5", "--order", "ab,ba", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn order_validation_and_oracle_check_pass_for_shipped_schemes() {
    for order in ["ab", "ab,ba", "ba,ab,ab", "ab|ba,ab"] {
        let (v, code) = json(&["validate-order", "--order", order, "--n-max", "3"]);
        assert_eq!(code, 0, "{order}");
        assert_eq!(v["result"]["violation"], Value::Null);
    }
    let (v, code) = json(&["oracle-check", "--max-len", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["schemes"].as_array().unwrap().len(), 3);
    assert!(v["result"]["duval_checks"].as_u64().unwrap() > 0);
}

#[test]
fn alphabet_is_inferred_or_overridden() {
    let (v, _) = json(&["factorize", "cab"]);
    assert_eq!(v["inputs"]["alphabet"], "abc");
    assert_eq!(v["inputs"]["order"], "abc");
    assert_eq!(v["result"]["factors"], serde_json::json!(["c", "ab"]));
    let (v, _) = json(&["factorize", "ba", "--alphabet", "ba"]);
    assert_eq!(v["inputs"]["order"], "ba");
    assert_eq!(v["result"]["factors"], serde_json::json!(["ba"]));
}

#[test]
fn boundaries_and_minimal_factors() {
    let (v, code) = json(&["boundaries", "abaabbabab", "--n-max", "4", "--order", "ab,ba"]);
    assert_eq!(code, 0);
    let rows = v["result"]["boundaries"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["factor"], "a");
    let (v, _) = json(&["minimal-factor", "ab(aab)", "--n", "3", "--order", "ab,ba"]);
    assert_eq!(v["result"]["factor"], "aba");
    assert_eq!(v["result"]["first_occurrence"], 0);
}
