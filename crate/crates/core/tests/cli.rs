use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsemicat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&["validate", &fixture("three_chain.json")]), 0);
    let (c, v) = json(&["validate", &fixture("broken.json")]);
    assert_eq!(c, 1);
    let bad = v["objects"].as_array().unwrap().iter().find(|o| o["name"] == "Bad").unwrap();
    assert_eq!(bad["error"]["kind"], "AssocFailure");
    assert_eq!(bad["error"]["detail"]["AssocFailure"]["arrows"], serde_json::json!([1, 1, 1]));
    assert_eq!(code(&["validate", &fixture("dangling.json")]), 4);
    assert_eq!(code(&["validate", "/nonexistent/file.json"]), 4);
}

#[test]
fn presheaf_counts() {
    let f = fixture("three_chain.json");
    for (class, n) in [("all", 3), ("regular", 2), ("yoneda", 2)] {
        let (c, v) = json(&["presheaves", &f, "A", "--type", "*", "--class", class]);
        assert_eq!(c, 0);
        assert_eq!(v["counts"]["*"], n, "{class}");
        assert_eq!(v["schema"], 1);
    }
    let (_, v) = json(&["presheaves", &f, "A", "--class", "yoneda"]);
    let vals: Vec<u64> = v["presheaves"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["values"]["*"].as_u64().unwrap())
        .collect();
    assert_eq!(vals, vec![0, 2]);
    assert_eq!(code(&["presheaves", &f, "A", "--cap", "2"]), 2);
    assert_eq!(code(&["presheaves", &f, "A", "--variance", "co"]), 0);
}

#[test]
fn morita_exit_codes() {
    let f = fixture("three_chain.json");
    let (c, v) = json(&["morita", &f, "A", "C"]);
    assert_eq!(c, 1);
    assert_eq!(v["morita"], false);
    assert_eq!(v["skeleton_sizes"], serde_json::json!([2, 3]));
    assert_eq!(v["routes_agree"], true);
    assert_eq!(v["certificate"], Value::Null);
    let (c, v) = json(&["morita", &f, "A", "A"]);
    assert_eq!(c, 0);
    assert!(v["certificate"].is_object());
    assert_eq!(code(&["morita", &f, "Lt", "Lt"]), 3);
    assert_eq!(code(&["morita", &f, "A", "Missing"]), 4);
}

#[test]
fn completion_commands() {
    let f = fixture("three_chain.json");
    let (c, v) = json(&["completion", "idm", &f, "Q"]);
    assert_eq!(c, 0);
    assert_eq!(v["objects"].as_array().unwrap().len(), 3);
    assert_eq!(code(&["completion", "verify", &f, "A", "A"]), 0);
    assert_eq!(code(&["completion", "verify", &f, "Lt", "Lt"]), 3);
    assert_eq!(code(&["completion", "idm", &fixture("broken.json"), "Bad"]), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["bogus"]), 4);
    assert_eq!(code(&[]), 4);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn reports_are_deterministic() {
    let f = fixture("three_chain.json");
    for args in [
        vec!["morita", f.as_str(), "A", "C", "--json"],
        vec!["presheaves", f.as_str(), "A", "--json"],
        vec!["completion", "idm", f.as_str(), "Q"],
        vec!["validate", f.as_str(), "--seed", "7"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status, b.status);
    }
}
