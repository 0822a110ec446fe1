use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schur-synth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn decompose_singlet_and_doublet() {
    let o = run(&["decompose", "su3:(1,1,1);0,0,0;1,0", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let amps = v["outputs"]["amplitudes"].as_array().unwrap();
    assert_eq!(amps.len(), 6);
    for a in amps {
        assert_eq!((a["num"].as_u64(), a["den"].as_u64()), (Some(1), Some(6)));
    }
    let o = run(&["decompose", "--label", "su2:(2,1);1;1,0"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("|110>  +sqrt(2/3)"), "{text}");
    assert!(text.contains("|011>  -sqrt(1/6)"), "{text}");
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &["decompose", "su3:(2,1,0);1,1,1;1,2", "--format", "json"][..],
        &["verify", "su3", "3", "--format", "json"][..],
        &["resources", "--group", "su2", "--n", "16", "--format", "json"][..],
        &["isoscalar-table", "2", "1", "--format", "json"][..],
    ] {
        let a = without_timing(json(&run(args)));
        let b = without_timing(json(&run(args)));
        assert_eq!(a, b, "{args:?}");
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn parse_errors_exit_two_and_name_the_constraint() {
    let o = run(&["decompose", "su2:(2,1);1;0,0"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("replay_path") && err.contains("step 2"), "{err}");
    for bad in [&["decompose", "su4:(1);0;"][..], &["frobnicate"][..], &["verify"][..], &["resources", "su2"][..]] {
        assert_eq!(code(&run(bad)), 2, "{bad:?}");
    }
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn verify_sweeps() {
    let o = run(&["verify", "su2", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let levels = v["outputs"]["levels"].as_array().unwrap();
    assert_eq!(levels.last().unwrap()["labels"], 32);
    let o = run(&["verify", "--group", "su3", "--max-n", "3", "--mode", "float", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["outputs"]["levels"][2]["passed"], 27);
    assert_eq!(code(&run(&["verify", "su2", "1"])), 0);
}

#[test]
fn thread_cap_is_read_from_the_environment() {
    let o = bin().args(["verify", "su2", "4"]).env("SCHUR_SYNTH_THREADS", "1").output().unwrap();
    assert_eq!(code(&o), 0);
    let o = bin().args(["verify", "su2", "4"]).env("SCHUR_SYNTH_THREADS", "many").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn synthesize_then_simulate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("su3_3.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["synthesize", "--group", "su3", "--n", "3", "--out", p])), 0);
    for mode in ["exact", "float"] {
        let o = run(&["simulate", p, "--label", "su3:(2,1,0);2,0,1;2,1", "--mode", mode]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    }
    // wrong particle count is an input error
    assert_eq!(code(&run(&["simulate", p, "--label", "su3:(1,1,0);1,0,1;1"])), 2);

    // a circuit missing a rotation no longer reproduces the engine
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let gates = c["gates"].as_array_mut().unwrap();
    let first_rot = gates.iter().position(|g| g["type"] == "DATA_ROT").unwrap();
    gates.remove(first_rot);
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string(&c).unwrap()).unwrap();
    let o = run(&["simulate", broken.to_str().unwrap(), "--label", "su3:(2,1,0);2,0,1;2,1"]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stdout));

    // without --out the circuit itself goes to stdout
    let o = run(&["synthesize", "--group", "su2", "--n", "4"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["group"], "su2");
    assert_eq!(v["n"], 4);
}

#[test]
fn resources_report_ratios() {
    let o = run(&["resources", "su2", "8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["outputs"]["measured"]["data_rot_by_formula"]["su2_cg_angle"], 7);
    assert!(v["outputs"]["ratios"]["NOT"].is_null());
    let r = v["outputs"]["ratios"]["CNOT"].as_f64().unwrap();
    assert!((0.5..=2.0).contains(&r));
}

#[test]
fn isoscalar_table_rows() {
    let o = run(&["isoscalar-table", "1", "0", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o)["outputs"]["factors"].as_array().unwrap().clone();
    // (1,0) ⊗ (1,0): the symmetric top state has a single u factor of 1
    let top = rows.iter().find(|r| r["child"] == serde_json::json!([2, 0]) && r["k"] == 2 && r["l"] == 0).unwrap();
    assert_eq!((top["quark"].as_str(), top["num"].as_u64(), top["den"].as_u64()), (Some("u"), Some(1), Some(1)));
}
