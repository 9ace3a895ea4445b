use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn gqd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqd")).args(args).output().expect("binary runs")
}

fn spec(name: &str) -> String {
    specs().join(name).to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn classify_ds3() {
    let out = gqd(&["classify", "--spec", &spec("s3.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let labels = v["labels"].as_array().unwrap();
    assert_eq!(labels.len(), 8);
    let mut degrees: Vec<u64> = labels.iter().map(|l| l["degree"].as_u64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, [1, 1, 2, 2, 2, 2, 3, 3]);
    assert_eq!(v["sum_of_squares"], 36);
    assert_eq!(v["context"]["dim"], 36);
    assert_eq!(labels[3]["g_label"], "(1,2)");
    assert_eq!(labels[3]["orbit"], serde_json::json!([1, 3, 4]));
    for key in ["g", "orbit", "M_index", "M_degree", "degree"] {
        assert!(labels[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn classify_trivial_pair_and_characters() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trivial.json");
    std::fs::write(&path, r#"{"G": {"kind": "named", "name": "cyclic", "param": 1}}"#).unwrap();
    let out = gqd(&["classify", "--spec", path.to_str().unwrap(), "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["labels"].as_array().unwrap().len(), 1);
    assert_eq!(v["characters"][0]["values"], serde_json::json!([[0, 0, "1"]]));
}

#[test]
fn non_injective_map_exits_2() {
    let out = gqd(&["classify", "--spec", &spec("non_injective.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("not injective") && err.contains("elements 0 and 2"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"G\": ").unwrap();
    let missing = dir.path().join("missing.json");
    let s3 = spec("s3.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["fusion", "--spec", &s3, "--left", "1-0", "--right", "0:0"],
        vec!["fusion", "--spec", &s3, "--left", "1:7", "--right", "0:0"],
        vec!["fusion", "--spec", &s3, "--left", "4:0", "--right", "0:0"],
        vec!["fusion", "--spec", &s3, "--left", "(1,4):0", "--right", "0:0"],
        vec!["fusion", "--spec", &s3],
        vec!["classify", "--spec", broken.to_str().unwrap()],
        vec!["classify", "--spec", missing.to_str().unwrap()],
        vec!["verify", "--spec", &s3, "--suite", "nope"],
        vec!["verify", "--spec", &s3, "--suite", "hopf", "--cap", "35"],
    ];
    for args in cases {
        let out = gqd(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn fusion_single_product() {
    let out = gqd(&["fusion", "--spec", &spec("s3.json"), "--left", "(1,2):0", "--right", "0:0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v, serde_json::json!({"left": "1:0", "right": "0:0", "terms": [{"g": 1, "M": 0, "mult": 1}]}));
    // two double cosets: g.g = (1,3,2) in the orbit of (1,2,3), and g^-1 g = e
    // where the trivial character of C3 induces to trivial + sign
    let out = gqd(&["fusion", "--spec", &spec("s3.json"), "--left", "2:0", "--right", "2:0", "--fast"]);
    let v = json(&out);
    let terms: Vec<(u64, u64, u64)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["g"].as_u64().unwrap(), t["M"].as_u64().unwrap(), t["mult"].as_u64().unwrap()))
        .collect();
    assert_eq!(terms, [(0, 0, 1), (0, 1, 1), (2, 0, 1)]);
}

#[test]
fn fusion_all_and_csv() {
    let out = gqd(&["fusion", "--spec", &spec("s3.json"), "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out).as_array().unwrap().len(), 64);
    let out = gqd(&["fusion", "--spec", &spec("s3.json"), "--all", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("# left")).count(), 8);
    assert!(text.lines().any(|l| l == "0:1,0,1,0,0,0,0,0,0"));
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = gqd(&["ring", "--spec", &spec("s3_c3.json"), "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["unit"], 0);
    assert!(v["phi_images"].as_array().unwrap().iter().all(|x| x["image"].is_object()));
}

#[test]
fn ring_images_of_ds3() {
    let out = gqd(&["ring", "--spec", &spec("s3.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let image = v["phi_images"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["label"] == "1:0")
        .unwrap()["image"]
        .clone();
    assert_eq!(image, serde_json::json!({"(1,2)": 1, "(1,3)": 1, "(2,3)": 1}));
}

#[test]
fn chartable_of_s3() {
    let out = gqd(&["chartable", "--spec", &spec("s3.json"), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "character,(),\"(1,2)\",\"(1,2,3)\"\n0,1,1,1\n1,1,-1,1\n2,2,0,-1\n");
    let out = gqd(&["chartable", "--spec", &spec("d4_centre.json"), "--all"]);
    let v = json(&out);
    // the centre acts trivially: G plus one table per element
    assert_eq!(v.as_array().unwrap().len(), 1 + 8);
}

#[test]
fn verify_all_suites_on_ds3() {
    let out = gqd(&["verify", "--spec", &spec("s3.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    for prefix in ["hopf.", "clifford.", "fusion.", "ring."] {
        assert!(names.iter().any(|n| n.starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn corrupted_constant_fails_with_witness() {
    let out = gqd(&["verify", "--spec", &spec("s3.json"), "--suite", "hopf", "--corrupt", "7,13"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));
    let twist = failed.iter().find(|c| c["check"] == "hopf.twist_matches_direct").unwrap();
    assert!(twist["witness"].as_str().unwrap().starts_with("product e7*e13"));
}
