use rotsieve::battery::{BatteryOptions, Scope};
use rotsieve::cli::{battery_command, run_captured, Format};
use rotsieve::core::{Error, Result};
use serde_json::Value;

fn run(args: &str) -> (i32, String, String) {
    run_captured(std::iter::once("rotsieve").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn enumerate_a1() {
    let v = json("paths enumerate --type A --rank 1 --weights 1,1,1,1");
    let paths = v.as_array().unwrap();
    assert_eq!(paths.len(), 2);
    assert_eq!(paths[0]["points"], serde_json::json!([[1], [0], [1], [0]]));
    assert_eq!(paths[1]["type"], serde_json::json!([[1], [1], [1], [1]]));
}

#[test]
fn csp_check_a1() {
    let v = json("csp check --type A --rank 1 --weights 1,1,1,1 --ell 1");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["fixed_counts"], serde_json::json!([2, 0, 2, 0]));
    assert_eq!(v["polynomial"], serde_json::json!([0, 0, 0, 0, 1, 0, 1]));
    let (code, out, _) = run("csp check --type A --rank 1 --weights 1,1,1,1 --ell 1");
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"r":4,"ell":1,"fixed_counts""#));
}

#[test]
fn kostka_text() {
    assert_eq!(run("kostka --shape 2,2 --content 1,1,1,1"), (0, "q^2 + q^4\n".into(), String::new()));
    assert_eq!(run("kostka --shape 2,2 --content 1,1,1,1 --oracle").1, "q^2 + q^4\n");
    assert_eq!(run("kostka --shape 2,1 --content 1,1,1 --format json").1, "[0,1,1]\n");
    assert_eq!(run("kostka --shape 2,2 --content 1,2,1 --format csv").1, "degree,coefficient\n1,1\n");
}

#[test]
fn failing_polynomial_exits_1() {
    let (code, out, _) = run("csp check --type A --rank 1 --weights 1,1 --poly 0,1");
    assert_eq!(code, 1);
    assert!(out.contains(r#""verdict":"fail""#));
    let (code, _, _) = run("csp check --type A --rank 1 --weights 1,1 --poly 0,0,1");
    assert_eq!(code, 0);
}

#[test]
fn user_polynomial_outside_type_a() {
    assert_eq!(run("csp check --type D --rank 4 --weights 1,1,1,1").0, 2);
    let orbits = json("paths orbits --type D --rank 4 --weights 1,1,1,1");
    let fixed: Vec<i64> = serde_json::from_value(orbits["fixed_counts"].clone()).unwrap();
    assert_eq!(fixed[0], 3);
    // A constant polynomial sieves exactly when R acts trivially.
    let (code, out, _) = run("csp check --type D --rank 4 --weights 1,1,1,1 --poly 3");
    let expected = if fixed.iter().all(|&n| n == 3) { 0 } else { 1 };
    assert_eq!(code, expected, "{out}");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        "frobnicate",
        "paths enumerate --type A --rank 1",
        "paths enumerate --type Q --rank 1 --weights 1",
        "paths enumerate --type A --rank 1 --weights 2",
        "paths enumerate --type A --rank 1 --weights 0",
        "paths enumerate --type E --rank 9 --weights 1",
        "paths enumerate --type B --rank 3 --weights 1",
        "paths orbits --type A --rank 1 --weights 1,1,1,1 --ell 3",
        "kostka --shape 2,2 --content 1,1,1",
        "kostka --shape 1,2 --content 1,1,1",
        "tableau promote --data [[1,2],[3]]",
        "tableau promote --data not-json",
        "tableau promote --input /nonexistent/file.json",
        "root minuscule --type A --rank 1 --format csv --bogus",
        "tableau from-path --type A --rank 1 --data {\"type\":[[1],[1]],\"points\":[[1],[1]]}",
        "crystal rotate --type A --rank 1 --data {\"factors\":[[1],[1]]}",
        "paths rotate --type A --rank 1 --data {\"type\":[[1],[1]],\"points\":[[1],[0]]} --format csv",
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args}: {out}");
        assert!(!err.is_empty(), "{args}");
    }
    let (_, _, err) = run("frobnicate");
    assert!(err.contains("Usage"));
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run("--help");
    assert_eq!(code, 0);
    assert!(out.contains("battery"));
}

#[test]
fn enumeration_cap() {
    assert_eq!(run("paths enumerate --type A --rank 1 --weights 1,1,1,1,1,1,1,1 --cap 10").0, 2);
    assert_eq!(run("crystal invariants --type A --rank 1 --weights 1,1,1,1,1,1 --cap 3").0, 2);
}

#[test]
fn rotation_and_promotion_agree() {
    let path = r#"{"type":[[1],[1],[1],[1]],"points":[[1],[0],[1],[0]]}"#;
    let rotated = json(&format!("paths rotate --type A --rank 1 --data {path}"));
    assert_eq!(rotated["points"], serde_json::json!([[1], [2], [1], [0]]));
    let back = json(&format!("paths rotate --type A --rank 1 --times 4 --data {path}"));
    assert_eq!(back, serde_json::from_str::<Value>(path).unwrap());

    let t = json(&format!("tableau from-path --type A --rank 1 --data {path}"));
    assert_eq!(t, serde_json::json!([[1, 3], [2, 4]]));
    let promoted = json("tableau promote --data [[1,3],[2,4]]");
    let expected = json(&format!(
        "tableau from-path --type A --rank 1 --data {}",
        serde_json::to_string(&rotated).unwrap()
    ));
    assert_eq!(promoted, expected);
    assert_eq!(json("tableau promote --orbit --data [[1,3],[2,4]]").as_array().unwrap().len(), 2);
    assert_eq!(json("tableau to-path --data [[1,3],[2,4]]"), serde_json::from_str::<Value>(path).unwrap());
}

#[test]
fn tableau_from_file() {
    let dir = std::env::temp_dir().join(format!("rotsieve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("t.json");
    std::fs::write(&file, "[[1, 2], [3, 4]]").unwrap();
    let v = json(&format!("tableau promote --input {}", file.display()));
    assert_eq!(v, serde_json::json!([[1, 3], [2, 4]]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn crystal_commands() {
    let v = json("crystal invariants --type A --rank 1 --weights 1,1,1,1");
    assert_eq!(v.as_array().unwrap().len(), 2);
    let b = serde_json::to_string(&v[0]).unwrap();
    let rotated = json(&format!("crystal rotate --type A --rank 1 --data {b}"));
    assert_eq!(rotated, v[1]);
    let v = json("crystal invariants --type E --rank 6 --weights 1,6,1,6");
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn root_minuscule() {
    let v = json("root minuscule --type D --rank 5");
    let nodes: Vec<u64> = v["minuscule"].as_array().unwrap().iter().map(|e| e["node"].as_u64().unwrap()).collect();
    assert_eq!(nodes, vec![1, 4, 5]);
    assert_eq!(run("root minuscule --type E --rank 8 --format text").1, "no minuscule weights\n");
    assert_eq!(run("root minuscule --type A --rank 2 --format csv").1, "node,orbit_size\n1,3\n2,3\n");
}

#[test]
fn orbits_with_period_two() {
    let v = json("paths orbits --type A --rank 3 --weights 1,3,1,3 --ell 2");
    assert_eq!(v["r"], 2);
    let v = json("csp check --type A --rank 2 --weights 1,2,1,2 --ell 2");
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn output_is_deterministic() {
    for args in [
        "paths orbits --type A --rank 1 --weights 1,1,1,1,1,1",
        "crystal invariants --type D --rank 4 --weights 1,1,1,1",
        "battery --format json",
    ] {
        assert_eq!(run(args), run(args), "{args}");
    }
}

#[test]
fn quick_battery_passes() {
    let (code, out, _) = run("battery --scope quick");
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("8/8 suites passed"));
    let v = json("battery --format json");
    let suites = v["suites"].as_array().unwrap();
    assert!(suites.iter().filter(|s| s["status"] == "pass").count() >= 6);
}

// Charge read off the reversed word.
fn broken_charge(word: &[u32]) -> Result<u64> {
    let reversed: Vec<u32> = word.iter().rev().copied().collect();
    rotsieve::core::kostka::charge(&reversed).map_err(|_| Error::InvalidContent)
}

#[test]
fn broken_charge_fails_the_oracle_suite() {
    let opts = BatteryOptions { statistic: broken_charge, ..BatteryOptions::new(Scope::Quick) };
    let mut out = Vec::new();
    let code = battery_command(&opts, Some(Format::Text), &mut out);
    let out = String::from_utf8(out).unwrap();
    assert_eq!(code, 1);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains(" fail ")).collect();
    assert_eq!(failing.len(), 1, "{out}");
    assert!(failing[0].starts_with("kostka-oracle"));
    assert!(out.contains("case: {\"shape\""));
}
