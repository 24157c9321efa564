use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ischubert")).args(args).env_remove("ISCHUBERT_FORMAT").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn expand_fhat_json() {
    let v = json(&["expand-fhat", "(2,4)(5,7)"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["expansion"]["basis"], "P");
    let terms: Vec<(Vec<u64>, i64)> = v["expansion"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (serde_json::from_value(t["shape"].clone()).unwrap(), t["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(terms, vec![(vec![4], 1), (vec![3, 1], 2)]);
}

#[test]
fn expansion_routes_agree() {
    // the truncation route is only practical for short involutions
    for (y, small) in [("(2,4)(5,7)", true), ("(1,4)(2,3)", true), ("(1,6)(2,5)(3,4)", false), ("(1,3)(2,5)(4,7)(6,8)", false)] {
        let tree = stdout(&["expand-fhat", y]);
        for route in ["quasi", "insertion", "truncation"] {
            if route == "truncation" && !small {
                continue;
            }
            assert_eq!(stdout(&["expand-fhat", y, "--route", route]), tree, "{y} {route}");
        }
        let q = stdout(&["expand-fhat", y, "--basis", "q"]);
        assert_eq!(stdout(&["expand-fhat", y, "--basis", "q", "--route", "quasi"]), q, "{y}");
    }
    assert_eq!(stdout(&["expand-fhat", "(2,4)(5,7)", "--basis", "q"]).trim(), "2*Q(4) + 2*Q(3,1)");
    assert_eq!(stdout(&["--notation", "word", "expand-fhat", "1 2"]).trim(), "P(2)");
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "rhat", "1..6"]).trim(), "1 1 2 8 80 2688");
    assert_eq!(stdout(&["count", "r", "1..5"]).trim(), "1 1 2 16 768");
    assert_eq!(stdout(&["count", "g", "1..8"]).trim(), "1 2 4 8 15 27 47 80");
    assert_eq!(stdout(&["count", "v", "1..6"]).trim(), "1 2 4 10 24 63");
    assert_eq!(json(&["count", "rhat", "6"])["values"][0], 2688);
}

#[test]
fn sweeps_pass() {
    assert_eq!(stdout(&["verify", "pfaffian", "--n", "3", "--all-phi"]).trim(), "pfaffian n=3: 7 cases, all pass");
    assert!(stdout(&["verify", "pfaffian", "--n", "4", "--phi", "1,3"]).contains("1 cases, all pass"));
    for what in ["transition", "triangularity", "insertion-agreement"] {
        assert!(stdout(&["verify", what, "--n", "4"]).contains("all pass"), "{what}");
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    for args in [&["count", "v", "1..6"][..], &["verify", "transition", "--n", "4"], &["--format", "json", "ls-tree", "(1,5)(2,3)(4,6)"]] {
        let one = stdout(&[&["--jobs", "1"], args].concat());
        let many = stdout(&[&["--jobs", "3"], args].concat());
        assert_eq!(one, many, "{args:?}");
        assert_eq!(one, stdout(args), "{args:?}");
    }
}

#[test]
fn trees() {
    let v = json(&["ls-tree", "1254376", "--classical"]);
    let mut leaves: Vec<&str> = v["leaves"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    leaves.sort();
    assert_eq!(leaves, ["1256347", "1362457", "2351467"]);
    let v = json(&["ls-tree", "(2,4)(5,7)"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    let text = stdout(&["ls-tree", "(2,4)(5,7)"]);
    assert!(text.ends_with("expansion: P(4) + 2*P(3,1)\n"));
}

#[test]
fn insertion() {
    let text = stdout(&["insert", "5,4,1,3,4,5,2,1,2"]);
    assert!(text.contains("1 2 3 4 5\n  3 5\n"), "{text}");
    assert!(text.contains("{6,7'}"));
    assert!(text.trim_end().ends_with("Des: {1,2,6,7}"));
    let v = json(&["insert", "3 5 4 1 2 3", "--mode", "ick"]);
    assert_eq!(v["P"], serde_json::json!([[1, 2, 3], [3, 4], [5]]));
    assert_eq!(v["Q"], serde_json::json!([[1, 2, -4], [3, -5], [6]]));
    assert_eq!(v["involution"], "(1,4)(2,5)(3,6)");
    let v = json(&["insert", "5 4 1", "--trace"]);
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    assert_eq!(v["steps"][1]["Q"], serde_json::json!([[[1], [-2]]]));
}

#[test]
fn classify() {
    let v = json(&["classify", "(1,2)(3,5)"]);
    assert_eq!(v["p_vexillary"], false);
    assert_eq!(v["p_witness"]["pattern"], "(1,2)(3,5)");
    let v = json(&["classify", "(1,4)(2,3)"]);
    assert_eq!(v["p_vexillary"], true);
    assert_eq!(v["q_vexillary"], true);
    assert_eq!(v["dominant"], true);
    assert!(stdout(&["classify", "(1,5)"]).contains("i-grassmannian: yes"));
}

#[test]
fn polynomials() {
    assert_eq!(stdout(&["schubert", "132"]).trim(), "x1 + x2");
    assert_eq!(stdout(&["inv-schubert", "321"]).trim(), "x1^2 + x1*x2");
    assert_eq!(stdout(&["inv-schubert", "321", "--method", "atoms"]).trim(), "x1^2 + x1*x2");
    assert_eq!(stdout(&["--notation", "word", "schubert", "2 1"]), stdout(&["schubert", "312"]));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ischubert"))
        .args(["count", "rhat", "1..3"])
        .env("ISCHUBERT_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["values"], serde_json::json!([1, 1, 2]));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["expand-fhat", "(1,2"]), 1);
    assert_eq!(code(&["expand-fhat", "231"]), 1);
    assert_eq!(code(&["insert", "1 1", "--mode", "ick"]), 1);
    assert_eq!(code(&["expand-fhat", "(2,4)(5,7)", "--route", "truncation", "--width", "2"]), 1);
    assert_eq!(code(&["verify", "pfaffian", "--n", "3"]), 1);
    assert_eq!(code(&["count", "r", "1..12"]), 2);
    assert_eq!(code(&["--guard", "3", "ls-tree", "(1,5)"]), 2);
    assert_eq!(code(&["--guard", "3", "expand-fhat", "(1,4)(2,5)(3,6)", "--route", "insertion"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
