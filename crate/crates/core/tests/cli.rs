use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn write_config(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeboson"))
        .args(args)
        .env_remove("FREEBOSON_THREADS")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const FOUR_POINT: &str =
    r#"{"words": [[[{"m":1,"re":0}],[{"m":1,"re":1}],[{"m":1,"re":2}],[{"m":1,"re":3}]]]}"#;

const HS: &str = r#"{"discs": [{"a_re":0,"a_im":0,"q_re":1,"q_im":0},{"a_re":10,"a_im":0,"q_re":1,"q_im":0}],
                    "truncation": {"M":1,"N":2}}"#;

#[test]
fn correlator_four_point() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "c.json", FOUR_POINT);
    let out = run(&["correlator", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["command"], "correlator");
    assert_eq!(doc["result"]["values"][0]["value"]["re"], "169/576");
    assert_eq!(doc["result"]["values"][0]["value"]["im"], "0");
}

#[test]
fn float_mode_gives_numbers() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "c.json", FOUR_POINT);
    let out = run(&["correlator", "--config", cfg.to_str().unwrap(), "--mode", "float"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)["result"]["values"][0]["value"]["re"].as_f64().unwrap();
    assert!((v - 169.0 / 576.0).abs() < 1e-14);
}

#[test]
fn exact_output_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "h.json", HS);
    let a = run(&["hsnorm", "--config", cfg.to_str().unwrap()]);
    let b = run(&["hsnorm", "--config", cfg.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_eq!(doc["result"]["regime"], true);
    assert_eq!(doc["result"]["bound"]["re"], "23/22");
}

#[test]
fn hsnorm_csv_to_file() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "h.json", HS);
    let out_path = dir.path().join("table.csv");
    let out = run(&["hsnorm", "--config", cfg.to_str().unwrap(), "--csv", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "total_insertions,tuple_count,partial_sum,bound");
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "0,1,1,23/22");
}

#[test]
fn amplitude_entries() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "a.json",
        r#"{"discs": [{"a_re":0,"q_re":1,"q_im":1},{"a_re":10,"q_re":1}],
            "states": [[{"1":1},{"1":1}], [{"1":1},{"2":1}], [{"1":2},{"2":1}]]}"#,
    );
    let out = run(&["amplitude", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let entries = json(&out)["result"]["entries"].clone();
    assert_eq!(entries[2]["value"]["re"], "0");
    assert_eq!(entries[0]["value_exact"], true);
}

#[test]
fn schema_errors_exit_one_with_document() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "bad.json", r#"{"words": [[[{"m":1,"re":"1/2"}]]]}"#);
    let out = run(&["correlator", "--config", cfg.to_str().unwrap(), "--mode", "float"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["error"]["kind"], "schema");
    assert_eq!(doc["error"]["module"], "cli");

    let cfg = write_config(&dir, "typo.json", r#"{"wordz": []}"#);
    assert_eq!(run(&["correlator", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn domain_errors_carry_their_module() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "pole.json", r#"{"words": [[[{"m":1,"re":"1/2"}],[{"m":2,"re":"1/2"}]]]}"#);
    let out = run(&["correlator", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["error"]["kind"], "pole");
    assert_eq!(doc["error"]["module"], "correlator");

    let cfg = write_config(&dir, "overlap.json", r#"{"discs": [{"a_re":0,"q_re":1},{"a_re":1,"q_re":1}], "truncation": {"M":1,"N":1}}"#);
    let out = run(&["hsnorm", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["module"], "amplitude");
}

#[test]
fn verify_passes_and_thread_override_is_checked() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "v.json", r#"{"verify": {"seed": 3, "samples": 4}}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_freeboson"))
        .args(["verify", "--config", cfg.to_str().unwrap()])
        .env("FREEBOSON_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["result"]["passed"], true);
    assert_eq!(doc["result"]["suites"].as_array().unwrap().len(), 8);

    let out = Command::new(env!("CARGO_BIN_EXE_freeboson"))
        .args(["verify", "--config", cfg.to_str().unwrap()])
        .env("FREEBOSON_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_is_rejected_outside_hsnorm() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "c.json", FOUR_POINT);
    let out = run(&["correlator", "--config", cfg.to_str().unwrap(), "--csv"]);
    assert_eq!(out.status.code(), Some(1));
}
