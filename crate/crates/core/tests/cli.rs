use std::path::Path;
use std::process::{Command, Output};

use qmodular::series::PuiseuxSeries;

fn run(args: &[&str], home: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmodular"))
        .args(args)
        .env_remove("QMODULAR_CONFIG")
        .env_remove("XDG_CONFIG_HOME")
        .env_remove("XDG_CACHE_HOME")
        .env("HOME", home)
        .env("QMODULAR_CACHE_DIR", home.join("cache"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let home = tempfile::tempdir().unwrap();
    let h = home.path();
    assert_eq!(run(&["series", "X", "--order", "1"], h).status.code(), Some(2));
    assert_eq!(run(&["verify", "ramanujan-e2", "--order", "60"], h).status.code(), Some(0));
    let bad = run(&["verify", "kk-residual", "--k", "13/7", "--order", "40", "--perturb"], h);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("\"pass\": false"));
    assert_eq!(run(&["verify", "no-such-check"], h).status.code(), Some(2));
    assert_eq!(run(&["verify", "eta-e2", "--tolerance", "1e-3"], h).status.code(), Some(2));
    assert_eq!(run(&["solve", "--k", "-1", "--order", "10"], h).status.code(), Some(2));
    assert_eq!(run(&["solve", "--k", "0.5"], h).status.code(), Some(2));
    assert_eq!(run(&["classify", "--k", "-7/2"], h).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], h).status.code(), Some(2));
    assert_eq!(run(&["--help"], h).status.code(), Some(0));
}

#[test]
fn solve_and_classify_output() {
    let home = tempfile::tempdir().unwrap();
    let o = run(&["solve", "--k", "5", "--order", "50", "--json"], home.path());
    assert!(stdout(&o).contains("\"c\": \"60\""));
    let o = run(&["solve", "--k", "1/5", "--order", "50", "--json"], home.path());
    assert!(stdout(&o).contains("\"c\": \"0\""));
    let o = run(&["classify", "--k", "1/5", "--json"], home.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tag"], "FullyModular");
    assert_eq!(v["level"], 5);
    assert_eq!(v["r"], "1/5");
    let o = run(&["classify", "--k", "5", "--json"], home.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tag"], "QuasiModular");
    assert_eq!(v["weight"], "6");
}

#[test]
fn text_rendering() {
    let home = tempfile::tempdir().unwrap();
    let o = run(&["series", "E4", "--order", "3", "--format", "text"], home.path());
    assert_eq!(stdout(&o).trim(), "1 + 240q + 2160q^2 + 6720q^3 + O(q^4)");
    let o = run(&["series", "t", "--order", "2", "--format", "json"], home.path());
    assert!(stdout(&o).starts_with("{\"ram\":5,\"lead\":1,"));
}

#[test]
fn cache_is_coherent() {
    let home = tempfile::tempdir().unwrap();
    let h = home.path();
    for name in ["t", "eta_pow:-7/5", "E2"] {
        let args = ["series", name, "--order", "40", "--format", "json"];
        let miss = run(&args, h);
        let hit = run(&args, h);
        let mut fresh_args = args.to_vec();
        fresh_args.push("--no-cache");
        let fresh = run(&fresh_args, h);
        assert_eq!(miss.stdout, hit.stdout, "{name}");
        assert_eq!(miss.stdout, fresh.stdout, "{name}");
    }
    let files = std::fs::read_dir(h.join("cache")).unwrap().count();
    assert_eq!(files, 3);
}

#[test]
fn json_and_text_agree() {
    let home = tempfile::tempdir().unwrap();
    for name in ["E4", "eta", "t", "eta_pow:1/2"] {
        let json = run(&["series", name, "--order", "12", "--format", "json"], home.path());
        let text = run(&["series", name, "--order", "12", "--format", "text"], home.path());
        let s: PuiseuxSeries = serde_json::from_str(stdout(&json).trim()).unwrap();
        assert_eq!(s.to_string(), stdout(&text).trim(), "{name}");
    }
}

#[test]
fn config_file_sets_defaults() {
    let home = tempfile::tempdir().unwrap();
    let cfg = home.path().join("q.toml");
    std::fs::write(&cfg, "order = 2\n").unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "series", "E4"], home.path());
    assert_eq!(stdout(&o).trim(), "1 + 240q + 2160q^2 + O(q^3)");
    let o = run(&["--config", cfg.to_str().unwrap(), "series", "E4", "--order", "1"], home.path());
    assert_eq!(stdout(&o).trim(), "1 + 240q + O(q^2)");
    let missing = home.path().join("absent.toml");
    assert_eq!(run(&["--config", missing.to_str().unwrap(), "series", "E4"], home.path()).status.code(), Some(2));
}

#[test]
fn verify_all_exact() {
    let home = tempfile::tempdir().unwrap();
    let o = run(&["verify", "all", "--order", "30"], home.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 9);
}
