use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionring"))
        .args(args)
        .env_remove("FUSIONRING_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema").join(format!("{name}.schema.json"));
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    JSONSchema::compile(&raw).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Runs with `--format json`, checks the exit code and validates the payload.
fn json(args: &[&str], schema_name: &str, code: i32) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s = schema(schema_name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} does not match {schema_name}: {msgs:?}");
    }
    v
}

#[test]
fn sl2_product_example() {
    let v = json(&["product", "--type", "A", "--rank", "2", "--ell", "5", "--sl", "1", "1"], "product", 0);
    let nus: Vec<&Value> = v["terms"].as_array().unwrap().iter().map(|t| &t["nu"]).collect();
    assert_eq!(nus, [&serde_json::json!([0]), &serde_json::json!([2])]);
    assert!(v["terms"].as_array().unwrap().iter().all(|t| t["coeff"] == 1));
}

#[test]
fn g2_verify_example() {
    let v = json(&["ideal-verify", "--type", "G2", "--ell", "21", "--preset", "G2"], "certificate", 0);
    assert_eq!(v["status"], "VERIFIED");
}

#[test]
fn c2_alcove_example() {
    let v = json(&["alcove", "--type", "C", "--rank", "2", "--ell", "12"], "alcove", 0);
    assert_eq!(v["level"], 3);
    assert_eq!(v["size"], 10);
    assert_eq!(v["basis"].as_array().unwrap().len(), 10);
}

#[test]
fn every_subcommand_matches_its_schema() {
    json(&["alcove", "--type", "A", "--rank", "3", "--ell", "7"], "alcove", 0);
    json(&["mult", "--type", "B", "--rank", "2", "1,1"], "mult", 0);
    json(&["product", "--type", "A", "--rank", "2", "--ell", "5", "eps:2,1", "eps:1,0"], "product", 0);
    json(&["table", "--type", "G2", "--ell", "21"], "table", 0);
    json(&["nc-product", "--type", "C", "--rank", "2", "--ell", "12", "1,0", "0,1"], "product", 0);
    json(&["nc-product", "--type", "A", "--rank", "3", "--ell", "7", "--sl", "1,0", "1,1"], "product", 0);
    json(&["compare", "--type", "C", "--rank", "2", "--ell", "11", "--against", "fusion"], "compare", 0);
    json(&["ideal-min", "--type", "D", "--rank", "4", "--ell", "13"], "ideal-min", 0);
    json(&["ideal-gens", "--type", "B", "--rank", "2", "--ell", "11", "--preset", "B-odd"], "ideal-gens", 0);
    json(&["ideal-verify", "--type", "A", "--rank", "3", "--ell", "5", "--preset", "A-I"], "certificate", 0);
    json(&["g2-check", "--ell", "24"], "certificate", 0);
    json(&["selftest", "--quick"], "selftest", 0);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["ideal-verify", "--type", "B", "--rank", "2", "--ell", "11", "--preset", "B-odd", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    let args = ["selftest", "--quick", "--seed", "7", "--format", "json"];
    let first = stdout(&run(&args));
    assert_eq!(first, stdout(&run(&args)));
    assert!(first.contains("\"seed\": 7"));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["alcove", "--type", "C", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["alcove", "--type", "Q", "--rank", "2", "--ell", "5"]).status.code(), Some(2));
    assert_eq!(run(&["alcove", "--type", "C", "--rank", "3", "--ell", "5"]).status.code(), Some(2));
    assert_eq!(
        run(&["ideal-verify", "--type", "C", "--rank", "2", "--ell", "11", "--preset", "C-even"]).status.code(),
        Some(2)
    );
    // unsupported tilting character
    let v = json(&["ideal-verify", "--type", "B", "--rank", "2", "--ell", "14"], "certificate", 3);
    assert_eq!(v["status"], "UNSUPPORTED");
    // a bound too small to reach the canonical generators
    let v = json(
        &["ideal-verify", "--type", "A", "--rank", "3", "--ell", "5", "--preset", "A-I", "--bound", "0"],
        "certificate",
        3,
    );
    assert_eq!(v["status"], "INCONCLUSIVE");
    // table cap
    let o = run(&["table", "--type", "A", "--rank", "3", "--ell", "9", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn out_and_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.tsv");
    let o = run(&["table", "--type", "A", "--rank", "2", "--ell", "5", "--sl", "--format", "tsv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(rows.contains(&"1\t1\t2\t1"));
    assert!(rows.contains(&"3\t3\t0\t1"));
    // at level 3 the product [a][b] has min(a, b, 3-a, 3-b) + 1 terms
    let expected: usize = (0..=3i64)
        .flat_map(|a| (0..=3i64).map(move |b| (a.min(b).min(3 - a).min(3 - b) + 1) as usize))
        .sum();
    assert_eq!(rows.len(), expected);
}

#[test]
fn cache_dir_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["mult", "--type", "C", "--rank", "2", "2,1", "--cache-dir", d, "--format", "json"];
    let first = stdout(&run(&args));
    let file = dir.path().join("C2").join("2_1.mult");
    assert!(file.exists());
    assert_eq!(first, stdout(&run(&args)));
    // a corrupted entry is ignored and rewritten
    std::fs::write(&file, "garbage").unwrap();
    assert_eq!(first, stdout(&run(&args)));
    assert!(std::fs::read_to_string(&file).unwrap().starts_with("fusionring-mult v1"));
}
