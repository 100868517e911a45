use std::path::PathBuf;
use std::process::{Command, Output};

use mldeg::cli::{builtin_catalog, load_catalog, ModelSpec};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mldeg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn model_file(tag: &str, json: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("mldeg-cli-{}-{tag}.json", std::process::id()));
    std::fs::write(&path, json).unwrap();
    path
}

fn entry_file(name: &str) -> PathBuf {
    let entry = builtin_catalog().into_iter().find(|e| e.name == name).unwrap();
    model_file(name, &entry.model.to_json())
}

#[test]
fn compute_four_cycle_with_five_trials() {
    let path = entry_file("4cycle");
    let o = bin(&["compute", "-m", path.to_str().unwrap(), "--trials", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["value"], 5);
    assert_eq!(report["engine"], "critical");
    assert_eq!(report["trials"].as_array().unwrap().len(), 5);
    for key in ["prime", "seed", "count"] {
        assert!(report["trials"][0].get(key).is_some(), "{key}");
    }
    assert!(report["warnings"].is_array());
}

#[test]
fn human_readable_compute() {
    let path = entry_file("k11_k22_zero");
    let o = bin(&["compute", "-m", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ml degree: 1\n"));
}

#[test]
fn segre_symbol_of_a_pencil_and_of_a_polar() {
    let path = entry_file("pencil_11_1");
    let o = bin(&["segre-symbol", "-m", path.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "[(1 1) 1]"));
    let path = entry_file("polar_3");
    let o = bin(&["segre-symbol", "-m", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["segre_symbol"], "[3]");
}

#[test]
fn reciprocal_methods() {
    let path = entry_file("polar_11_1");
    for method in ["slice", "implicitize"] {
        let o = bin(&["reciprocal", "--method", method, "-m", path.to_str().unwrap(), "--json"]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["value"], 4, "{method}");
    }
}

#[test]
fn zero_test_and_intersection() {
    let path = entry_file("type_f");
    let o = bin(&["zero-test", "-m", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["is_zero"], true);
    let path = entry_file("polar_11_1");
    let o = bin(&["intersection-degree", "-m", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["projective_dimension"].as_i64(), v["projective_degree"].as_i64()), (Some(0), Some(1)));
}

#[test]
fn exit_codes() {
    let missing = bin(&["compute", "-m", "/nonexistent/model.json"]);
    assert_eq!(missing.status.code(), Some(1));
    let garbage = model_file("garbage", "{\"n\": 2");
    assert_eq!(bin(&["compute", "-m", garbage.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));

    let singular = model_file("singular", r#"{"n": 2, "space": {"kind": "basis", "matrices": [[["1","0"],["0","0"]]]}}"#);
    assert_eq!(bin(&["compute", "-m", singular.to_str().unwrap()]).status.code(), Some(2));
    let singular_pencil = model_file("singular-pencil", r#"{"n": 3, "space": {"kind": "basis", "matrices": [
        [["1","0","0"],["0","0","0"],["0","0","0"]], [["0","0","0"],["0","1","0"],["0","0","0"]]]}}"#);
    assert_eq!(bin(&["segre-symbol", "-m", singular_pencil.to_str().unwrap()]).status.code(), Some(2));

    let path = entry_file("4cycle");
    let starved = bin(&["compute", "-m", path.to_str().unwrap(), "--max-pairs", "1"]);
    assert_eq!(starved.status.code(), Some(3), "{}", stdout(&starved));
    assert!(stdout(&starved).starts_with("ml degree: inconclusive"));
    let tiny = bin(&["compute", "-m", path.to_str().unwrap(), "--prime-bits", "4"]);
    assert_eq!(tiny.status.code(), Some(1));
    let wrong_engine = bin(&["compute", "-m", path.to_str().unwrap(), "--engine", "hyperplane"]);
    assert_eq!(wrong_engine.status.code(), Some(1));
}

#[test]
fn catalog_is_deterministic_and_passes() {
    let a = bin(&["catalog", "--seed", "7"]);
    let b = bin(&["catalog", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let table = stdout(&a);
    let names: Vec<&str> = table.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), builtin_catalog().len());
}

#[test]
fn external_catalog_file_loads_and_passes() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/catalogs/external_three_planes.json");
    let entries = load_catalog(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(entries.iter().all(|e| e.provenance.source.starts_with("external")));
    let o = bin(&["catalog", path, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let results: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(results.as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn strict_mode_fails_a_wrong_conjecture() {
    let mut entries = builtin_catalog();
    entries.retain(|e| e.name == "hyperplane_r2");
    entries[0].expected.mld = 7;
    entries[0].conjecture = true;
    let path = model_file("conjecture", &serde_json::to_string(&entries).unwrap());
    assert_eq!(bin(&["catalog", path.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(bin(&["catalog", path.to_str().unwrap(), "--strict"]).status.code(), Some(3));
    entries[0].conjecture = false;
    std::fs::write(&path, serde_json::to_string(&entries).unwrap()).unwrap();
    assert_eq!(bin(&["catalog", path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn model_round_trip_for_every_catalog_entry() {
    for e in builtin_catalog() {
        let space = e.space().unwrap();
        let again = ModelSpec::from_json(&ModelSpec::from_space(e.model.name.clone(), &space).to_json()).unwrap();
        assert!(again.to_space().unwrap().same_span(&space), "{}", e.name);
    }
}
