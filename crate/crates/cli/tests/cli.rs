use std::path::PathBuf;

use lm_atlas_cli::{run, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("lm-atlas").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = cli(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}\n{err}"));
    (code, v)
}

fn manifests() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../manifests")
}

#[test]
fn roots_listing() {
    let (code, out, _) = cli(&["roots", "A2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("positive roots: 3"));
    assert!(out.contains("fundamental group order: 3"));

    let (_, out, _) = cli(&["roots", "G2"]);
    assert!(out.contains("minuscule: none"));

    let (code, v) = json(&["--format", "json", "roots", "D4"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["weyl_order"], "192");
    assert_eq!(v["minuscule"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(cli(&["roots", "Z9"]).0, EXIT_INPUT);
    assert_eq!(cli(&["adm", "A2", "--mu", "1,-1"]).0, EXIT_INPUT);
    assert_eq!(cli(&["adm", "A2", "--mu", "1,0,0"]).0, EXIT_INPUT);
    assert_eq!(cli(&["verify", "helam-iso", "G2", "--mu", "1,0"]).0, EXIT_INPUT);
    assert_eq!(cli(&["verify", "helam-iso", "A2"]).0, EXIT_INPUT);
    assert_eq!(cli(&["adm", "A2", "--mu", "minuscule:1", "-Y", "4"]).0, EXIT_INPUT);
    assert_eq!(cli(&["--format", "dot", "roots", "A2"]).0, EXIT_INPUT);
    assert_eq!(cli(&["no-such-command"]).0, EXIT_INPUT);
}

#[test]
fn adm_sizes() {
    for (ty, size) in [("A1", 3), ("A2", 7), ("A3", 15), ("A4", 31)] {
        let (code, v) = json(&["--format", "json", "adm", ty, "--mu", "minuscule:1"]);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(v["size"], size, "{ty}");
    }
    let (_, out, _) = cli(&["adm", "A2", "--mu", "0,0"]);
    assert!(out.contains("size 1"));
    let (_, out, _) = cli(&["adm", "A1", "--mu", "1", "--parahoric", "1"]);
    assert!(out.contains("parahoric Y={1}: 1 classes"));
}

#[test]
fn adm_budget_exhaustion_exits_3() {
    let (code, _, err) = cli(&["--budget", "5", "adm", "A3", "--mu", "0,1,0"]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");
}

#[test]
fn adm_exports() {
    let (code, out, _) = cli(&["--format", "dot", "adm", "A2", "--mu", "1,0"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("digraph"));
    assert!(out.contains(" -> "));
    let (_, out, _) = cli(&["--format", "tsv", "adm", "A2", "--mu", "1,0"]);
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn verify_reports() {
    let (code, v) = json(&["verify", "helam-iso", "A2", "--mu", "minuscule:1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["instance"]["J"], serde_json::json!([2]));
    assert_eq!(v["sizes"]["ordered_pairs"], 324);

    let (code, v) = json(&["verify", "adm-bijection", "C3", "--mu", "minuscule:3"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["sizes"]["Adm"], v["sizes"]["image"]);

    let (code, v) = json(&["verify", "slice-formulas", "B2", "--Y", "1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["sizes"]["b_slices"], 4);

    let (code, v) = json(&["verify", "fiber-partition", "B3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(v["sizes"]["parts"].as_u64().unwrap() > 1);
}

#[test]
fn corollary_coverage_is_pass_or_inconclusive() {
    let (code, v) = json(&["verify", "corollary-coverage", "A2", "--J", "2", "--Y", "1"]);
    assert!(code == EXIT_PASS || code == EXIT_INCONCLUSIVE);
    let coverage = v["coverage"].as_f64().unwrap();
    assert_eq!(code == EXIT_PASS, coverage >= 1.0);
    assert_ne!(code, EXIT_FAIL);

    let (code, v) = json(&["verify", "corollary-coverage", "A3", "--mu", "minuscule:2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["sizes"]["parts"], 8);
}

#[test]
fn orbit_poset_outputs() {
    let (code, v) = json(&["--format", "json", "orbit-poset", "A2", "--mu", "1,0"]);
    assert_eq!(code, EXIT_PASS);
    // Q_mu is in bijection with Adm(mu)
    assert_eq!(v["size"], 7);
    assert_eq!(v["maxima"].as_array().unwrap().len(), 3);
    let (_, dot, _) = cli(&["--format", "dot", "orbit-poset", "B2", "--J", "1", "-Y", "2"]);
    assert!(dot.starts_with("digraph"));
    let (code, _, _) = cli(&["orbit-poset", "A2"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn bruhat_oracle_uses_cache() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(lm_atlas_cli::cache::CACHE_DIR_ENV, dir.path());
    let args = ["verify", "bruhat-oracle", "A2", "--bound", "5"];
    let (c1, first, e1) = cli(&args);
    let (c2, second, e2) = cli(&args);
    assert_eq!((c1, c2), (EXIT_PASS, EXIT_PASS));
    assert!(e1.contains("built"), "{e1}");
    assert!(e2.contains("cache hit"), "{e2}");
    assert_eq!(first, second);

    let (_, v) = json(&["--format", "json", "cache", "stat"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
    let (_, out, _) = cli(&["cache", "clear"]);
    assert!(out.starts_with("removed 1"));
}

#[test]
fn table_from_manifest() {
    let path = manifests().join("examples.json");
    let path = path.to_str().unwrap();
    let (code, v) = json(&["--format", "json", "table", path]);
    assert_eq!(code, EXIT_PASS);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
    let (_, tsv, _) = cli(&["--format", "tsv", "table", path]);
    assert_eq!(tsv.lines().count(), 6);
    assert_eq!(cli(&["--format", "dot", "table", path]).0, EXIT_INPUT);
    assert_eq!(cli(&["table", "/nonexistent/manifest.json"]).0, EXIT_INPUT);
}

#[test]
fn table_exit_code_is_worst_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(
        &path,
        r#"{"instances": [
            {"type": "A2", "mu": [1, 0], "checks": ["adm-bijection"]},
            {"type": "A2", "mu": [3, 0], "checks": []},
            {"type": "Q7", "checks": []}
        ]}"#,
    )
    .unwrap();
    let (code, v) = json(&["--budget", "20", "--format", "json", "table", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["status"], "pass");
    assert_eq!(rows[1]["status"], "error");
    assert_eq!(rows[2]["status"], "error");
}
