use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jones-genus2"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Writes the searched representation into `dir` and returns its path.
fn searched_rep(dir: &Path) -> String {
    let path = dir.join("rep.json");
    let out = run(dir, &["search", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_builtin_passes() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["validate", "--json"]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["status"], "PASS");
    assert_eq!(doc["determinant_sign"], 1);
    assert_eq!(doc["header"]["representation"]["normalization"]["a"], -4);
    assert_eq!(doc["header"]["representation"]["normalization"]["m"], 5);
    assert_eq!(doc["relations"].as_array().unwrap().len(), 17);
}

#[test]
fn validate_perturbed_rep_fails_with_check_code() {
    let dir = TempDir::new().unwrap();
    let path = searched_rep(dir.path());
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    doc["generators"][0][0][1] = json!([[0, "1"]]);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, doc.to_string()).unwrap();
    let out = run(
        dir.path(),
        &["validate", "--rep", bad.to_str().unwrap(), "--json"],
    );
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_json(&out)["status"], "FAIL");
}

#[test]
fn missing_rep_file_is_environment_error() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["validate", "--rep", "missing.json"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn malformed_rep_file_is_schema_error() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.json"), r#"{"dim": 5}"#).unwrap();
    let out = run(
        dir.path(),
        &["analyze", "--rep", "bad.json", "--word", "(c1 c2)^6"],
    );
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("SCHEMA_ERROR"));
}

#[test]
fn usage_error_exits_3_and_help_exits_0() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(dir.path(), &["analyze", "--bogus"])), 3);
    assert_eq!(code(&run(dir.path(), &["--help"])), 0);
    assert_eq!(code(&run(dir.path(), &["analyze", "--order", "1"])), 3);
}

#[test]
fn analyze_separating_twist_both_cases() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["analyze", "--word", "(c1 c2)^6", "--json"]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    let cases: Vec<&str> = results
        .iter()
        .map(|r| r["case"].as_str().unwrap())
        .collect();
    assert_eq!(cases, ["plus", "minus"]);
    for r in results {
        assert_eq!(r["status"], "OK");
        assert_eq!(r["report"]["depth"], 1);
        assert_eq!(r["report"]["trace"], "0/1");
    }
}

#[test]
fn analyze_non_torelli_word() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &["analyze", "--word", "c1", "--case", "plus", "--json"],
    );
    assert_eq!(code(&out), 2);
    let doc = stdout_json(&out);
    assert_eq!(doc["results"][0]["status"], "NOT_TORELLI");
}

#[test]
fn analyze_bad_word_is_environment_error() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["analyze", "--word", "c9"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn low_order_reports_valuation_exceeding_order() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &["analyze", "--order", "4", "--case", "plus", "--json"],
    );
    assert_eq!(code(&out), 2);
    let doc = stdout_json(&out);
    let results = doc["results"].as_array().unwrap();
    assert!(results
        .iter()
        .any(|r| r["status"] == "VALUATION_EXCEEDS_ORDER"));
    assert!(results.iter().any(|r| r["status"] == "OK"));
}

#[test]
fn analyze_catalog_file() {
    let dir = TempDir::new().unwrap();
    fs::write(
        dir.path().join("words.txt"),
        "# twists\n(c1 c2)^6\n[(c1 c2)^6, (c2 c3)^6]\n",
    )
    .unwrap();
    let out = run(
        dir.path(),
        &[
            "analyze",
            "--catalog",
            "words.txt",
            "--case",
            "minus",
            "--json",
        ],
    );
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    let depths: Vec<i64> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["report"]["depth"].as_i64().unwrap())
        .collect();
    assert_eq!(depths, [1, 2]);
}

#[test]
fn decompose_default_passes() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["decompose", "--json"]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["status"], "PASS");
    assert_eq!(doc["sp"]["sum"], 25);
    assert_eq!(doc["sp"]["standard_dim"], 5);
    for case in doc["cases"].as_array().unwrap() {
        assert_eq!(case["degree0_group_order"], 720);
        assert_eq!(case["decomposition"]["dimension_sum"], "25/1");
        let present: Vec<&str> = case["decomposition"]["entries"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["multiplicity"] != "0/1")
            .map(|e| e["partition"].as_str().unwrap())
            .collect();
        assert_eq!(present, ["[6]", "[4,2]", "[3,1^3]", "[2^3]"]);
    }
}

#[test]
fn decompose_with_corrupted_table_fails() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &[
            "decompose",
            "--corrupt-chartable",
            "--case",
            "plus",
            "--json",
        ],
    );
    assert_eq!(code(&out), 2);
    let doc = stdout_json(&out);
    assert_eq!(doc["status"], "FAIL");
    assert!(!doc["diffs"].as_array().unwrap().is_empty());
}

#[test]
fn chartable_only_and_chartable_agree() {
    let dir = TempDir::new().unwrap();
    let a = run(dir.path(), &["decompose", "--chartable-only", "--json"]);
    let b = run(dir.path(), &["chartable", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let doc = stdout_json(&a);
    assert_eq!(doc["table"]["group_order"], 720);
    assert_eq!(doc["table"]["rows"].as_array().unwrap().len(), 11);
    assert_eq!(doc["dimensions_match_tableaux"], true);
}

#[test]
fn search_finds_normalization_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = searched_rep(dir.path());
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["normalization"]["a"], -4);
    assert_eq!(doc["normalization"]["m"], 5);
    assert_eq!(doc["dim"], 5);
    let out = run(dir.path(), &["validate", "--rep", &path]);
    assert_eq!(code(&out), 0);
}

#[test]
fn search_with_small_window_is_exhausted() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["search", "--max-m", "4"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("SEARCH_EXHAUSTED"));
}

#[test]
fn out_file_matches_json_stdout_and_runs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = [
        "analyze",
        "--word",
        "[(c1 c2)^6, (c2 c3)^6]",
        "--json",
        "--out",
        "report.json",
    ];
    let first = run(dir.path(), &args);
    let second = run(dir.path(), &args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let saved = fs::read(dir.path().join("report.json")).unwrap();
    assert_eq!(saved, first.stdout);
}
