use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perfpath"))
}

fn alg(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../algebras")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn perfpath")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_reports_dimension() {
    let out = run(&["info", alg("z2_babaa.alg").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dimension: 9"));
    assert!(text.contains("a b a b"));
}

#[test]
fn classify_json_schema() {
    let out = run(&["classify", alg("z2_babaa.alg").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 9);
    assert_eq!(v["basis_size"], 9);
    assert_eq!(v["relations_F"][0], "a b a b");
    assert_eq!(v["perfect_paths"][0]["path"], "a b");
    assert_eq!(v["perfect_paths"][0]["cycle"].as_array().unwrap().len(), 1);
    assert_eq!(v["perfect_paths"][0]["dim_vector"], serde_json::json!([1, 1]));
    assert_eq!(v["overlaps"].as_array().unwrap().len(), 0);
    assert_eq!(v["stable"]["cycle_lengths"], serde_json::json!([1]));
    assert_eq!(v["stable"]["semisimple"], true);
}

#[test]
fn classify_three_vertex() {
    let out = run(&[
        "classify",
        alg("three_vertex.alg").to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let paths: Vec<&str> = v["perfect_paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["path"].as_str().unwrap())
        .collect();
    assert_eq!(paths, vec!["a", "b"]);
}

#[test]
fn quadratic_report_and_dot() {
    let file = alg("two_cycle_with_tail.alg");
    let out = run(&["quadratic", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gorenstein"]["verdict"], "gorenstein");
    assert_eq!(v["gorenstein"]["bound"], 3);
    assert_eq!(v["gorenstein"]["cm_free"], false);

    let out = run(&["quadratic", file.to_str().unwrap(), "--dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"a\" -> \"b\""));
}

#[test]
fn nakayama_from_kupisch() {
    let out = run(&["nakayama", "--kupisch", "4,5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["nakayama"]["c"], serde_json::json!([4, 5]));
    assert_eq!(v["nakayama"]["theta"], serde_json::json!([1, 1]));
    assert_eq!(v["nakayama"]["black"], serde_json::json!([1]));
    assert_eq!(
        v["nakayama"]["theta_cyclically_black"],
        serde_json::json!([1])
    );
}

#[test]
fn stable_output() {
    let out = run(&["stable", alg("z2_babaa.alg").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cycle lengths: [1]"));
    assert!(text.contains("semisimple: true"));
}

#[test]
fn paths_as_arrows_flag() {
    let out = run(&[
        "classify",
        alg("z2_babaa.alg").to_str().unwrap(),
        "--json",
        "--paths-as-arrows",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["perfect_paths"][0]["path"], "ab");
}

#[test]
fn gen_emits_parseable_file_deterministically() {
    let a = run(&["gen", "--seed", "11"]);
    let b = run(&["gen", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("vertices:"));
}

#[test]
fn verify_small_run() {
    let out = run(&["verify", "--seed", "1", "--count", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 mismatches"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["info", "/nonexistent/file.alg"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["nakayama"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["quadratic", alg("z2_babaa.alg").to_str().unwrap()]);
    // not quadratic: input error
    assert_eq!(out.status.code(), Some(2));

    let out = bin().arg("bogus-subcommand").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
