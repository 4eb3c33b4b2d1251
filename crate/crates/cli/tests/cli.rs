use std::process::{Command, Output};

use drgtrade::bitrades::LabeledBitrade;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drgtrade")).args(args).env_remove("DRG_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_pasch() {
    let o = run(&["verify", "--family", "johnson:6,3", "--bitrade", "min"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in ["criterion a      true", "criterion b      true", "criterion c      true", "minimal          true"] {
        assert!(out.contains(line), "{out}");
    }
    assert!(out.contains("(3,2,1;1,2,3)"));
}

#[test]
fn wd_bound_of_grassmann() {
    let o = run(&["wd-bound", "--family", "grassmann:6,3,2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "30\n"));
}

#[test]
fn identity_sides() {
    let o = run(&["identity", "--eq5", "--d", "4", "--q", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["product"], "2240");
    assert_eq!(v["sum"], "2240");
    assert_eq!(v["equal"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["verify", "--family", "nosuch:3"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["build"])), 2, "missing --family");
    assert_eq!(code(&run(&["build", "--family", "johnson:6,3", "--cap", "10"])), 2);
    assert_eq!(code(&run(&["report"])), 2);
    let env = Command::new(env!("CARGO_BIN_EXE_drgtrade"))
        .args(["build", "--family", "johnson:6,3"])
        .env("DRG_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&env), 2, "DRG_CAP applies");
}

#[test]
fn theorem_failure_exits_1() {
    // odd halved cubes have no Delsarte clique system
    let o = run(&["cliques", "--family", "halved_cube:5"]);
    assert_eq!(code(&o), 1, "{o:?}");
}

#[test]
fn bitrade_json_round_trips_through_files() {
    let o = run(&["bitrade", "--family", "hamming:3,3", "--json"]);
    assert_eq!(code(&o), 0);
    let labeled = LabeledBitrade::from_json(&stdout(&o)).unwrap();
    assert_eq!(labeled.host, "hamming:3,3");
    assert_eq!(labeled.t0.len() + labeled.t1.len(), 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, labeled.to_json()).unwrap();
    let v = run(&["verify", "--bitrade", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&v), 0);
    // the verification report is itself a readable bitrade file
    assert_eq!(LabeledBitrade::from_json(&stdout(&v)).unwrap(), labeled);
}

#[test]
fn non_bitrade_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let bad = LabeledBitrade { host: "johnson:6,3".into(), t0: vec!["1,2,3".into()], t1: vec!["4,5,6".into()] };
    std::fs::write(&path, bad.to_json()).unwrap();
    let o = run(&["verify", "--bitrade", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["criterion_a"]["holds"], false);
    assert_eq!(v["criteria_agree"], true);

    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(code(&run(&["verify", "--bitrade", path.to_str().unwrap()])), 2);
    let mismatch = run(&["verify", "--family", "johnson:8,3", "--bitrade", path.to_str().unwrap()]);
    assert_eq!(code(&mismatch), 2);
}

#[test]
fn pseudo_bitrade_in_doob() {
    let o = run(&["verify", "--family", "doob:1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("meets bound  true"));
    assert_eq!(code(&run(&["verify", "--family", "doob:1,1", "--criterion", "a"])), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--family", "grassmann:4,2,2", "--json"][..],
        &["build", "--family", "octahedron:4", "--json"],
        &["report", "--check", "5"],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)), "{args:?}");
    }
}

#[test]
fn spectrum_and_check_dr() {
    let o = run(&["spectrum", "--family", "johnson:6,3"]);
    assert!(stdout(&o).contains("9 3 -1 -3"));
    let o = run(&["check-dr", "--family", "doob:1,0", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["array"], "(6,3;1,2)");
}

#[test]
fn report_all() {
    let o = run(&["report", "--all"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.ends_with("11/11 passed\n"), "{out}");
}
