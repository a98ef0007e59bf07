use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invariable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(&stdout(&full)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

#[test]
fn classes_examples() {
    let sizes = |g: &str| -> Vec<u64> {
        json(&["classes", g])["classes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["size"].as_u64().unwrap())
            .collect()
    };
    assert_eq!(sizes("sym 3"), [1, 3, 2]);
    assert_eq!(sizes("cyclic 5"), [1, 1, 1, 1, 1]);
    assert_eq!(sizes("alt 5").len(), 5);
    assert!(stdout(&["classes", "sym 3"]).contains("3 classes"));
}

#[test]
fn invgen_examples() {
    assert!(stdout(&["invgen", "sym 3", "(0 1), (0 1 2)"]).contains("invariably generates: yes"));
    let no = json(&["invgen", "sym 3", "(0 1), (0 2)", "--oracle"]);
    assert_eq!(no["invariably_generates"], false);
    assert_eq!(no["oracle_agrees"], true);
    assert_eq!(no["witness"]["generated_order"], 2);
    assert_eq!(json(&["invgen", "alt 5", "--min"])["minimal_size"], 2);
}

#[test]
fn invgen_rejects_non_members() {
    let out = run(&["invgen", "alt 4", "(0 1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn classify_examples() {
    let status = |chain: &str| json(&["classify", chain])["status"].as_str().unwrap().to_string();
    assert_eq!(status("{FIG, fg} wr int-translation"), "FIG");
    assert_eq!(status("{NEG_IG, fg} wr (sym 3, natural)"), "NEG_IG");
    assert_eq!(status("{IG, fg} wr int-translation"), "FIG");
    assert_eq!(status("{IG, nfg} wr int-translation"), "IG");
    let v = json(&["classify", "sym 3 wr (cyclic 2, regular) wr int-translation"]);
    assert_eq!(v["trace"].as_array().unwrap().len(), 3);
    assert_eq!(v["status"], "FIG");
}

#[test]
fn classify_round_trips_its_chain() {
    let v = json(&["classify", "{status: IG, fg: true}  wr (int,int-translation)"]);
    let canonical = v["chain"].as_str().unwrap().to_string();
    assert_eq!(canonical, "{IG, fg} wr int-translation");
    assert_eq!(json(&["classify", &canonical])["chain"], canonical.as_str());
}

#[test]
fn parse_errors_report_positions() {
    let out = run(&["classes", "perm 3: (0 1),\n (0 5)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 2"));
    let out = run(&["classify", "{FIG, fg} wr (sym 3, sideways)"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 22"));
}

#[test]
fn verify_examples() {
    let v = json(&["verify", "gamma", "--seed", "7", "--count", "200"]);
    assert_eq!(v["passed"], true);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    assert_eq!(checks[0]["cases"], 400);
    assert_eq!(checks[0]["failures"], 0);

    let conj = json(&["verify", "conjugation"]);
    let first = &conj["suites"][0]["checks"];
    assert!(first[0]["name"].as_str().unwrap().starts_with("C2 wr C2"));
    assert_eq!(first[2]["cases"], 64);

    assert_eq!(json(&["verify", "igsets", "--count", "20"])["passed"], true);
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn json_output_is_stable() {
    let args = ["--json", "verify", "coset", "--seed", "3", "--count", "30"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn wreath_eval() {
    let v = json(&["wreath", "eval", "{[0: (0 1)] t}^3 * t^-1", "--base", "sym 3"]);
    assert_eq!(v["element"], "[-2: (0 1), -1: (0 1), 0: (0 1)] t^2");
    let v = json(&["wreath", "eval", "[1: (0 1)] (0 1) ^ 2", "--base", "cyclic 2", "--head", "cyclic 2"]);
    assert_eq!(v["element"], "[0: (0 1), 1: (0 1)]");
    assert_eq!(v["in_base"], true);
    assert_eq!(run(&["wreath", "eval", "t", "--base", "cyclic 2", "--head", "cyclic 2"]).status.code(), Some(2));
}

#[test]
fn construct_commands() {
    let v = json(&["construct", "torsion", "--base", "cyclic 3", "--head", "sym 3", "--check"]);
    assert_eq!(v["check"]["order"], 162);
    assert_eq!(v["check"]["invariably_generates"], true);
    let v = json(&["construct", "nottorsion", "--base", "sym 3"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    assert_eq!(v["count_with_multiplicity"], 6);
    let v = json(&["construct", "nottorsion", "--base", "cyclic 3", "--check"]);
    assert!(v["check"].as_array().unwrap().iter().all(|c| c["invariably_generates"] == true));
    assert_eq!(run(&["construct", "nottorsion", "--base", "sym 3", "--shifts", "2,4"]).status.code(), Some(2));
}

#[test]
fn cap_is_enforced() {
    let out = run(&["--cap", "100", "classes", "sym 6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn file_arguments() {
    let dir = std::env::temp_dir().join(format!("invariable-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("group.txt");
    std::fs::write(&path, "perm 4:\n  (0 1 2 3),\n  (0 2)\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(json(&["classes", &arg])["order"], 8);
    std::fs::remove_dir_all(&dir).unwrap();
}
