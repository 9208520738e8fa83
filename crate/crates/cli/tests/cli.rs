use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford")).env_remove("CLIFFORD_SEED").args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).expect("write temp file");
    p
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn table_entries() {
    let t = json_of(&run(&["table", "--sig", "3,0"]));
    assert_eq!(t["signature"], serde_json::json!([3, 0]));
    assert_eq!(t["blades"][3], "e12");
    assert_eq!(t["table"][1][1], "+1");
    assert_eq!(t["table"][1][2], "+e12");
    assert_eq!(t["table"][2][1], "-e12");
    let t = json_of(&run(&["table", "--sig", "0,3"]));
    assert_eq!(t["table"][1][1], "-1");
    for p in 0..=4u8 {
        for q in 0..=(4 - p) {
            let sig = format!("{p},{q}");
            let t = json_of(&run(&["table", "--sig", &sig]));
            let names = t["blades"].as_array().unwrap();
            assert_eq!(names.len(), 1 << (p + q));
            for (x, name) in names.iter().enumerate() {
                assert_eq!(t["table"][0][x].as_str().unwrap(), format!("+{}", name.as_str().unwrap()));
            }
        }
    }
}

#[test]
fn table_pretty_is_text() {
    let out = run(&["table", "--sig", "2,0", "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn table_rejects_large_signature() {
    assert_eq!(run(&["table", "--sig", "3,2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--sig", "3"]).status.code(), Some(2));
}

#[test]
fn planewave_rest_solutions() {
    let p = write_tmp("up.json", r#"{"branch":"+","spin":"up","p":[0,0,0],"m":1.0}"#);
    let v = json_of(&run(&["planewave", "--params", path(&p), "--t", "0", "--x", "0,0,0"]));
    assert_eq!(v["psi"]["coeffs"], serde_json::json!({"1": 1.0}));
    assert!(v["residual"].as_f64().unwrap() <= 1e-10);

    let p = write_tmp("minus.json", r#"{"branch":"-","spin":"up","p":[0,0,0],"m":1.0}"#);
    let v = json_of(&run(&["planewave", "--params", path(&p), "--t", "0", "--x", "0,0,0"]));
    assert_eq!(v["psi"]["coeffs"], serde_json::json!({"e123": 1.0}));
}

#[test]
fn planewave_boosted_residual() {
    let p = write_tmp("boosted.json", r#"{"branch":"-","spin":"down","p":[0.4,-1.1,0.3],"m":0.7}"#);
    let v = json_of(&run(&["planewave", "--params", path(&p), "--t", "-1.25", "--x", "0.5,-2,1"]));
    assert!(v["residual"].as_f64().unwrap() <= 1e-10);
    // boost and phase are unit, so Psi conj(Psi) = e2 conj(e2) = -1
    let psi: clifford_spinor::Multivector = serde_json::from_value(v["psi"].clone()).unwrap();
    let d = psi * psi.conjugate();
    assert!((d.scalar_part() + 1.0).abs() < 1e-12 && (d - d.grade(0).unwrap()).norm_inf() < 1e-12);
}

#[test]
fn planewave_bad_input_is_usage_error() {
    let p = write_tmp("bad.json", r#"{"branch":"?","spin":"up","p":[0,0,0],"m":1.0}"#);
    assert_eq!(run(&["planewave", "--params", path(&p), "--t", "0", "--x", "0,0,0"]).status.code(), Some(2));
    let p = write_tmp("massless.json", r#"{"branch":"+","spin":"up","p":[0,0,0],"m":0.0}"#);
    assert_eq!(run(&["planewave", "--params", path(&p), "--t", "0", "--x", "0,0,0"]).status.code(), Some(2));
    let p = write_tmp("ok.json", r#"{"branch":"+","spin":"up","p":[0,0,0],"m":1.0}"#);
    assert_eq!(run(&["planewave", "--params", path(&p), "--t", "0", "--x", "0,0"]).status.code(), Some(2));
}

#[test]
fn decompose_scalar() {
    let p = write_tmp("two.json", r#"{"signature":[3,0],"coeffs":{"1":2.0}}"#);
    let v = json_of(&run(&["decompose", "--in", path(&p)]));
    assert_eq!(v["rho"], 4.0);
    assert_eq!(v["beta"], 0.0);
    assert_eq!(v["rotor"]["coeffs"], serde_json::json!({"1": 1.0}));
    assert_eq!(v["residual"], 0.0);
}

#[test]
fn decompose_unit_even_has_zero_angle() {
    let p = write_tmp("rot.json", r#"{"signature":[3,0],"coeffs":{"1":0.6,"e12":0.8}}"#);
    let v = json_of(&run(&["decompose", "--in", path(&p)]));
    assert!((v["rho"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    assert!(v["beta"].as_f64().unwrap().abs() < 1e-15);
}

#[test]
fn decompose_wrong_signature_is_usage_error() {
    let p = write_tmp("cl03.json", r#"{"signature":[0,3],"coeffs":{"1":1.0}}"#);
    assert_eq!(run(&["decompose", "--in", path(&p)]).status.code(), Some(2));
}

#[test]
fn verify_single_suite_report_shape() {
    let v = json_of(&run(&["verify", "--suite", "cl03", "--samples", "50"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["samples"], 50);
    assert!(v.get("wall_time_s").is_none());
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["suite"], "cl03");
    let ids: Vec<&str> = suites[0]["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in suites[0]["checks"].as_array().unwrap() {
        for key in ["id", "residual", "tolerance", "pass"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn verify_timing_is_opt_in() {
    let v = json_of(&run(&["verify", "--suite", "core", "--samples", "5", "--timing"]));
    assert!(v["wall_time_s"].as_f64().unwrap() >= 0.0);
}

#[test]
fn verify_seed_from_environment_wins() {
    let out = Command::new(env!("CARGO_BIN_EXE_clifford"))
        .env("CLIFFORD_SEED", "99")
        .args(["verify", "--suite", "rep", "--samples", "5", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["seed"], 99);
    let v = json_of(&run(&["verify", "--suite", "rep", "--samples", "5", "--seed", "3"]));
    assert_eq!(v["seed"], 3);
}

#[test]
fn verify_seeds_change_residuals() {
    let a = json_of(&run(&["verify", "--suite", "weyl", "--samples", "20", "--seed", "1"]));
    let b = json_of(&run(&["verify", "--suite", "weyl", "--samples", "20", "--seed", "2"]));
    assert_ne!(a["suites"], b["suites"]);
}

#[test]
fn verify_sequential_matches_parallel() {
    let a = run(&["verify", "--suite", "dirac", "--samples", "100"]);
    let b = run(&["verify", "--suite", "dirac", "--samples", "100", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_tolerance_override_can_fail_a_check() {
    let out = run(&["verify", "--suite", "rep", "--samples", "20", "--tolerance", "rep.homomorphism=-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rep.homomorphism"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--fault", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--tolerance", "x"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_clifford"))
        .env("CLIFFORD_SEED", "abc")
        .args(["verify", "--suite", "core", "--samples", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fault_only_breaks_the_dirac_suite() {
    let out = run(&["verify", "--suite", "weyl", "--suite", "cl03", "--samples", "20", "--fault", "boost-sign"]);
    assert_eq!(out.status.code(), Some(0));
}
