use std::path::PathBuf;
use std::process::{Command, Output};

fn divtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divtop"))
        .args(args)
        .env_remove("DIVTOP_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("divtop-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn check_t1_on_z12() {
    let o = divtop(&["check", "Zn:12", "--property", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T1: false; witness [2],[4]");
}

#[test]
fn check_discrete_on_z6() {
    let o = divtop(&["check", "Zn:6", "--property", "discrete"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("discrete: true"), "{}", stdout(&o));
}

#[test]
fn topology_dot_of_z6_has_two_nodes() {
    let o = divtop(&["topology", "Zn:6", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("[label=").count(), 2);
    assert!(!out.contains("->"), "Z_6 has no divisibility edges");
}

#[test]
fn topology_json_is_versioned() {
    let o = divtop(&["topology", "ab:2^2x3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["schema_version"].is_string());
}

#[test]
fn inspect_every_spec_kind() {
    for spec in ["Zn:12", "ab:2^2x3", "vs:p=3,d=2", "sym:Z,N=100", "sym:Q,B=10", "sym:E,p=2,D=8", "triv:n=4,m=2"] {
        let o = divtop(&["inspect", spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}: {}", stderr(&o));
        assert!(!stdout(&o).is_empty());
    }
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    for (spec, token) in [("Zn:abc", "abc"), ("ab:2^2y3", "2^2y3"), ("foo:1", "foo"), ("vs:p=4,d=2", "4")] {
        let o = divtop(&["inspect", spec]);
        assert_eq!(o.status.code(), Some(2), "{spec}");
        assert!(stderr(&o).contains(token), "{spec}: {}", stderr(&o));
    }
}

#[test]
fn unknown_property_and_theorem_are_usage_errors() {
    let o = divtop(&["check", "Zn:6", "--property", "T7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("T7"));
    let o = divtop(&["verify", "--theorems", "no-such-theorem"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-theorem"));
}

#[test]
fn ring_spec_has_no_topology() {
    let o = divtop(&["topology", "triv:n=4,m=2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passing_sweep_exits_0() {
    let o = divtop(&["verify", "--theorems", "pseudoZn", "--max-n", "1000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("pseudoZn"));
}

#[test]
fn verify_failing_sweep_exits_1() {
    let o = divtop(&["verify", "--theorems", "fgPS", "--max-order", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail Zn:4"), "{}", stdout(&o));
}

#[test]
fn verify_flagged_only_exits_3() {
    let o = divtop(&["verify", "--theorems", "tcom-symbolic"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_writes_report() {
    let dir = scratch("report");
    let path = dir.join("r.json");
    let o = divtop(&["verify", "--theorems", "t0,ttri", "--max-order", "20", "--trivial-bound", "50", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    assert_eq!(v["reports"][0]["theorem"]["id"], "t0");
    assert!(v["registry"].as_array().unwrap().len() >= 30);
}

#[test]
fn config_file_and_env_override() {
    let dir = scratch("config");
    let cfg = dir.join("run.json");
    let out_dir = dir.join("out");
    std::fs::write(
        &cfg,
        serde_json::json!({
            "max_order": 12,
            "theorems": ["fgPS"],
            "output_dir": out_dir,
            "formats": ["json", "dot"]
        })
        .to_string(),
    )
    .unwrap();

    let o = divtop(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("order <= 12"), "{}", stdout(&o));
    assert!(out_dir.join("report.json").exists());
    let dots = std::fs::read_dir(&out_dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "dot"))
        .count();
    assert!(dots >= 1, "failure graphs written");

    // The environment beats the file; a flag beats both.
    let o = Command::new(env!("CARGO_BIN_EXE_divtop"))
        .args(["verify", "--config", cfg.to_str().unwrap()])
        .env("DIVTOP_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "Z_4 is out of range at order 3");
    assert!(stdout(&o).contains("order <= 3"));
    let o = Command::new(env!("CARGO_BIN_EXE_divtop"))
        .args(["verify", "--config", cfg.to_str().unwrap(), "--max-order", "5"])
        .env("DIVTOP_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("order <= 5"));
}

#[test]
fn bad_config_is_a_usage_error() {
    let dir = scratch("badcfg");
    let cfg = dir.join("run.json");
    std::fs::write(&cfg, r#"{"max_order": 0}"#).unwrap();
    let o = divtop(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("max_order"));
    std::fs::write(&cfg, r#"{"max_ordr": 5}"#).unwrap();
    let o = divtop(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_writes_requested_formats() {
    let dir = scratch("export");
    let o = divtop(&["export", "Zn:12", "--out-dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert!(names.iter().any(|n| n.ends_with(".dot")), "{names:?}");
    assert!(names.iter().any(|n| n.ends_with(".json")), "{names:?}");
}
