use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcong")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn rows(v: &Value) -> Vec<Vec<i64>> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|e| match e {
                    Value::String(s) => s.parse().unwrap(),
                    other => other.as_i64().unwrap(),
                })
                .collect()
        })
        .collect()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn eval_cube_of_first_generator() {
    let out = run(&["eval", "--n", "3", "--word", "1,1,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(rows(&json(&out)), vec![vec![1, 3], vec![0, 1]]);
}

#[test]
fn eval_empty_word_is_identity() {
    let out = run(&["eval", "--n", "3", "--word", ""]);
    assert_eq!(code(&out), 0);
    assert_eq!(rows(&json(&out)), vec![vec![1, 0], vec![0, 1]]);
}

#[test]
fn eval_braid_relator_is_identity() {
    let out = run(&["eval", "--n", "5", "--word", "1 2 1 -2 -1 -2"]);
    assert_eq!(code(&out), 0);
    let r = rows(&json(&out));
    assert_eq!(r.len(), 4);
    for (i, row) in r.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(x, i64::from(i == j));
        }
    }
}

#[test]
fn eval_mod_and_word_file() {
    let path = scratch("eval_word.txt", "n=3; 1 1 1 1 1");
    let out = run(&["eval", "--word-file", path.to_str().unwrap(), "--mod", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["mod"], 3);
    assert_eq!(rows(&v), vec![vec![1, 2], vec![0, 1]]);
}

#[test]
fn eval_rejects_malformed_input() {
    assert_eq!(code(&run(&["eval", "--n", "3", "--word", "1 x"])), 2);
    assert_eq!(code(&run(&["eval", "--n", "3", "--word", "3"])), 2);
    assert_eq!(code(&run(&["eval", "--n", "3", "--word", "0"])), 2);
    assert_eq!(code(&run(&["eval", "--word", "1"])), 2);
    assert_eq!(code(&run(&["eval", "--n", "3", "--word-file", "/nonexistent/word"])), 2);
}

#[test]
fn member_exit_codes() {
    let yes = run(&["member", "--n", "3", "--m", "3", "--word", "1 1 1"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(json(&yes)["member"], true);
    let no = run(&["member", "--n", "3", "--m", "3", "--word", "1"]);
    assert_eq!(code(&no), 1);
    assert_eq!(json(&no)["member"], false);
    let twist = "1 2 ".repeat(12);
    assert_eq!(code(&run(&["member", "--n", "3", "--m", "97", "--word", &twist])), 0);
    assert_eq!(code(&run(&["member", "--n", "3", "--m", "0", "--word", "1"])), 2);
}

#[test]
fn verify_acampo_small() {
    let out = run(&["verify", "acampo", "--n", "3", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["cases"][0]["actual"], 24);
    assert_eq!(v["cases"][0]["status"], "pass");
}

#[test]
fn verify_level_three_generators() {
    let out = run(&["verify", "b33"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cases = v["cases"].as_array().unwrap();
    let members = cases.iter().filter(|c| c["name"].as_str().unwrap().starts_with("member/")).count();
    assert_eq!(members, 4);
    assert!(cases.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_symmetric_quotient_is_reproducible() {
    let args = ["verify", "symmetric-quotient", "--n", "3", "--p", "3", "--samples", "1000"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let other = run(&["verify", "symmetric-quotient", "--n", "3", "--p", "3", "--samples", "1000", "--seed", "7"]);
    assert_eq!(code(&other), 0);
}

#[test]
fn verify_serial_matches_parallel() {
    let a = run(&["verify", "wajnryb", "--n", "4"]);
    let b = run(&["verify", "wajnryb", "--n", "4", "--serial"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_writes_out_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("chain_report.json");
    let out = run(&["verify", "chain", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "chain");
}

#[test]
fn verify_failure_and_usage_codes() {
    // An enumeration limit below the group order makes the suite fail.
    assert_eq!(code(&run(&["verify", "acampo", "--n", "3", "--p", "3", "--limit", "5"])), 1);
    assert_eq!(code(&run(&["verify", "no-such-suite"])), 2);
    assert_eq!(code(&run(&["verify", "lemma42", "--p", "4"])), 2);
}

#[test]
fn enum_rep_orders() {
    let out = run(&["enum", "--rep", "n=3", "--mod", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["order"], 24);
    let out = run(&["enum", "--rep", "n=4", "--mod", "3"]);
    assert_eq!(json(&out)["order"], 648);
    let out = run(&["enum", "--pure", "n=3", "--mod", "6"]);
    assert_eq!(json(&out)["order"], 24);
}

#[test]
fn enum_limit_and_partial() {
    assert_eq!(code(&run(&["enum", "--rep", "n=4", "--mod", "3", "--limit", "50"])), 1);
    let out = run(&["enum", "--rep", "n=4", "--mod", "3", "--limit", "50", "--allow-partial"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["limit_hit"], true);
    assert_eq!(code(&run(&["enum", "--rep", "n=4"])), 2);
}

#[test]
fn enum_generator_file_round_trip() {
    let first = run(&["enum", "--rep", "n=3", "--mod", "5", "--exponent"]);
    let v = json(&first);
    assert_eq!(v["order"], 120);
    assert_eq!(v["exponent"], 60);
    let path = scratch("gens.json", &v["generators"].to_string());
    let second = run(&["enum", "--generators", path.to_str().unwrap()]);
    assert_eq!(code(&second), 0);
    assert_eq!(json(&second)["order"], 120);
}

#[test]
fn cosets_builtin_and_file() {
    let out = run(&["cosets", "presentation_G(3,3)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["index"], 24);
    let path = scratch("s3.txt", "# symmetric group of degree 3\ngens: 2\n1 1\n2 2\n1 2 1 2 1 2\n");
    let out = run(&["cosets", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["index"], 6);
}

#[test]
fn cosets_limit_and_errors() {
    assert_eq!(code(&run(&["cosets", "presentation_G(4,3)", "--limit", "100"])), 1);
    let out = run(&["cosets", "presentation_G(4,3)", "--limit", "100", "--allow-partial"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["complete"], false);
    assert_eq!(code(&run(&["cosets", "/nonexistent/presentation"])), 2);
    assert_eq!(code(&run(&["cosets", "presentation_G(3,4)"])), 2);
}
