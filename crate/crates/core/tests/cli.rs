use incgraph::cli::{main_with_args, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["incgraph"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_q8_is_a_star() {
    let (code, out, _) = run(&["analyze", "Q8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("shape: K1,3"));
    assert!(out.contains("ok       star: a star"));
}

#[test]
fn analyze_z30_is_a_hexagon() {
    let (code, out, _) = run(&["analyze", "Z30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("diameter: 3"));
    assert!(out.contains("girth: 6"));
}

#[test]
fn analyze_json_for_prime_order() {
    let (code, out, _) = run(&["analyze", "Z2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["n_vertices"], 0);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_reports_mismatch() {
    // the tree list leaves out Heis(p), whose graph is a tree
    let (code, out, _) = run(&["analyze", "Heis(3)"]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("MISMATCH"));
}

#[test]
fn invalid_specs_exit_2() {
    let (code, _, err) = run(&["analyze", "SD(7,3,1,2)"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("invalid group"));
    let (code, _, err) = run(&["analyze", "Z4y"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("parse error"));
    let (code, _, _) = run(&["analyze"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn order_cap_exits_4() {
    let (code, _, err) = run(&["analyze", "Z401"]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");
}

#[test]
fn export_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q8.dot");
    let (code, _, _) = run(&["export", "Q8", "--format", "dot", "-o", dot.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("[label=").count(), 4);
    assert_eq!(text.matches(" -- ").count(), 3);

    let json = dir.path().join("z8.json");
    run(&["export", "Z8", "--format", "json", "-o", json.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));

    let isolated = dir.path().join("z3z3.dot");
    run(&["export", "Z3xZ3", "--format", "dot", "-o", isolated.to_str().unwrap()]);
    let text = std::fs::read_to_string(&isolated).unwrap();
    assert_eq!((text.matches("[label=").count(), text.matches(" -- ").count()), (4, 0));
}

#[test]
fn isocheck_pairs() {
    let (code, out, _) = run(&["isocheck", "Z3xZ3", "S3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("isomorphic"));
    assert_eq!(out.lines().count(), 5);
    let (_, out, _) = run(&["isocheck", "Q8", "M8"]);
    assert!(out.starts_with("not isomorphic"));
}

#[test]
fn catalog_listing() {
    let (code, out, _) = run(&["catalog", "--max-order", "8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 16);
    assert!(out.lines().any(|l| l == "8\tQ8"));
}

#[test]
fn sweep_writes_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let args = |p: &std::path::Path| {
        vec![
            "sweep".to_string(),
            "--max-order".into(),
            "40".into(),
            "--theorem".into(),
            "complete".into(),
            "--theorem".into(),
            "omega_equals_chi".into(),
            "-o".into(),
            p.to_str().unwrap().to_string(),
        ]
    };
    let (code, out, _) = run(&args(&a).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS complete"));
    run(&args(&b).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn sweep_failure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("tree.jsonl");
    let (code, out, _) = run(&["sweep", "--max-order", "27", "--theorem", "tree", "-o", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("FAIL tree"));
    assert!(out.contains("Heis(3)"));
}

#[test]
fn help_mentions_dihedral_order() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("D8 is the dihedral group with 8 elements"));
}
