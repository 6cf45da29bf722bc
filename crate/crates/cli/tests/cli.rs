use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn cli() -> Command {
    Command::cargo_bin("supersinglet").unwrap()
}

fn run_json(args: &[&str], code: i32) -> Value {
    let out = cli()
        .args(args)
        .assert()
        .code(code)
        .get_output()
        .stdout
        .clone();
    serde_json::from_slice(&out).unwrap()
}

fn temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("supersinglet-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn ks_verify_ceg18() {
    let v = run_json(&["ks", "verify", "--builtin", "ceg18"], 0);
    assert_eq!(v["verdict"], "uncolorable");
    assert_eq!(v["command"], "ks verify");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert!(v["timing_ms"].is_number());
}

#[test]
fn classical_bound_ceg18() {
    let v = run_json(&["game", "classical-bound", "--builtin", "ceg18"], 0);
    assert_eq!(v["value"], "35/36");
    let threaded = run_json(
        &[
            "game",
            "classical-bound",
            "--builtin",
            "ceg18",
            "--threads",
            "3",
        ],
        0,
    );
    assert_eq!(threaded["value"], v["value"]);
    assert_eq!(threaded["witness_strategy"], v["witness_strategy"]);
}

#[test]
fn canonical_basis_is_colorable() {
    let path = temp(
        "canonical.json",
        r#"{"dim":4,"vectors":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
    );
    let v = run_json(&["ks", "verify", "--set", path.to_str().unwrap()], 1);
    assert_eq!(v["verdict"], "colorable");
}

#[test]
fn malformed_json_exits_2_with_location() {
    let path = temp("bad.json", "{\"dim\": 3,\n \"vectors\": [[1,0,0],]}");
    let out = cli()
        .args(["ks", "verify", "--set", path.to_str().unwrap()])
        .assert()
        .code(2)
        .get_output()
        .stderr
        .clone();
    let err = String::from_utf8(out).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    cli().args(["ks", "verify"]).assert().code(2);
    cli().args(["nonsense"]).assert().code(2);
    cli()
        .args(["ks", "verify", "--builtin", "nope"])
        .assert()
        .code(2);
}

#[test]
fn budget_exceeded_exits_2_with_advice() {
    let out = cli()
        .args(["game", "classical-bound", "--builtin", "ck31"])
        .env_remove("KS_SEARCH_BUDGET")
        .assert()
        .code(2)
        .get_output()
        .stderr
        .clone();
    let err: Value = serde_json::from_slice(&out).unwrap();
    assert!(err["advice"].as_str().unwrap().contains("KS_SEARCH_BUDGET"));
}

#[test]
fn export_round_trip() {
    let out = cli()
        .args(["catalog", "export", "--builtin", "peres24"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let path = temp("peres.json", std::str::from_utf8(&out).unwrap());
    let v = run_json(&["ks", "contexts", "--set", path.to_str().unwrap()], 0);
    assert_eq!(v["count"], 24);
    let exported = fs::read(&path).unwrap();
    let again = cli()
        .args(["catalog", "export", "--builtin", "peres24"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(exported, again);
    // the digest of the re-imported set equals the builtin's
    let a = run_json(&["ks", "contexts", "--builtin", "peres24"], 0);
    assert_eq!(a["input_digest"], v["input_digest"]);
}

#[test]
fn quantum_verify_reports_rationals() {
    let v = run_json(&["game", "quantum-verify", "--builtin", "ceg18"], 0);
    assert_eq!(v["min"], "1/1");
    let per = v["per_input"].as_array().unwrap();
    assert_eq!(per.len(), 36);
    assert!(per.iter().all(|e| e["p"] == "1/1"));
}

#[test]
fn selftest_modes() {
    let v = run_json(&["selftest", "--d", "4"], 0);
    assert_eq!(v["rank"], 23);
    assert_eq!(v["variables"], 24);
    assert_eq!(v["unique"], true);
    assert_eq!(v["witness"]["0123"], "1/1");
    assert_eq!(v["witness"]["0132"], "-1/1");
    let v = run_json(
        &[
            "selftest",
            "--builtin",
            "ck31",
            "--basis",
            "0,3,4",
            "--basis",
            "1,5,6",
        ],
        0,
    );
    assert_eq!(v["rank"], 5);
    let v = run_json(
        &["selftest", "--builtin", "peres24", "--basis", "4,5,6,7"],
        1,
    );
    assert_eq!(v["unique"], false);
}

#[test]
fn state_commands() {
    let v = run_json(
        &["state", "expand", "--builtin", "ceg18", "--context", "0"],
        0,
    );
    assert_eq!(v["nonzero"], 24);
    assert_eq!(v["total_probability"], "1/1");
    let v = run_json(&["state", "invariance", "--d", "3", "--samples", "3"], 0);
    assert!(v["samples"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["invariant"] == true));
    let v = run_json(&["state", "invariance", "--d", "3", "--phase", "0.5"], 0);
    assert_eq!(v["samples"][0]["invariant"], false);
    assert_eq!(v["samples"][0]["det_covariant"], true);
}

#[test]
fn ks_complete_and_catalog_list() {
    let v = run_json(&["ks", "complete", "--builtin", "ceg18"], 0);
    assert_eq!(v["complete_before"], false);
    assert_eq!(v["vectors_after"], 24);
    let v = run_json(&["catalog", "list"], 0);
    assert_eq!(v["sets"].as_array().unwrap().len(), 4);
}
