use assert_cmd::Command;
use serde_json::Value;

fn sombor() -> Command {
    Command::cargo_bin("sombor").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = sombor().args(args).output().unwrap();
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn path_of_ten() {
    let out = stdout_of(&["so", "--family", "path", "--n", "10"]);
    let expected = 14.0 * 2f64.sqrt() + 2.0 * 5f64.sqrt();
    assert_eq!(out.trim(), format!("sombor = {expected:.6}"));
}

#[test]
fn precision_flag() {
    let out = stdout_of(&["so", "--family", "star", "--n", "5", "--precision", "2"]);
    // 4 * sqrt(16 + 1)
    assert_eq!(out.trim(), "sombor = 16.49");
}

#[test]
fn edge_list_file_matches_graph6() {
    let dir = std::env::temp_dir().join(format!("sombor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("p4.csv");
    std::fs::write(&csv, "# path\n0,1\n1,2\n2,3\n").unwrap();
    let from_file = stdout_of(&["so", "--file", csv.to_str().unwrap()]);
    let from_family = stdout_of(&["so", "--family", "path", "--n", "4"]);
    assert_eq!(from_file, from_family);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn kappa_json_parses() {
    let out = stdout_of(&["kappa", "DQc"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "sombor.v1");
    assert_eq!(v["result"]["n"], 5);
    assert_eq!(v["result"]["vertex"]["value"], 1);
    assert_eq!(v["result"]["edge"]["value"], 1);
}

#[test]
fn kappa_of_complete_graph_has_no_certificate() {
    let out = stdout_of(&["kappa", "D~{"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["vertex"]["value"], 4);
    assert!(v["result"]["vertex"]["certificate"].is_null());
}

#[test]
fn gen_knk_round_trips_through_so() {
    let g6 = stdout_of(&["gen", "--family", "knk", "--n", "5", "--k", "2"]);
    let a = stdout_of(&["so", "--graph6", g6.trim()]);
    let b = stdout_of(&["so", "--family", "knk", "--n", "5", "--k", "2"]);
    assert_eq!(a, b);
    assert_eq!(a.trim(), "sombor = 38.843767");
}

#[test]
fn extremal_json() {
    let out = stdout_of(&[
        "extremal",
        "--n",
        "6",
        "--k",
        "2",
        "--mode",
        "vertex",
        "--objective",
        "max",
        "--json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["agrees"], true);
}

#[test]
fn verify_small_passes() {
    sombor()
        .args(["verify", "--nmax", "6"])
        .assert()
        .success()
        .stdout(predicates::str::contains("0 failed"));
}

#[test]
fn output_is_deterministic() {
    let args = ["counterexample", "--dmin", "2", "--dmax", "9"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = [
        "extremal",
        "--n",
        "6",
        "--k",
        "1",
        "--mode",
        "edge",
        "--objective",
        "min",
        "--json",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn counterexample_reports_gain() {
    let out = stdout_of(&["counterexample", "--dmin", "8", "--dmax", "8"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let pairs = v["result"].as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    let p = &pairs[0];
    assert!(p["so_gamma_alpha"].as_f64().unwrap() > p["so_gamma"].as_f64().unwrap());
}

#[test]
fn qspr_fits_print() {
    let out = stdout_of(&["qspr"]);
    assert!(out.contains("enthalpy of combustion"));
    let json = stdout_of(&["qspr", "--json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["study"]["fits"].as_array().unwrap().len(), 4);
}

#[test]
fn qspr_check_exits_one_on_reference_mismatch() {
    // One reference R^2 is off by more than the tolerance.
    sombor().args(["qspr", "--check"]).assert().code(1);
}

#[test]
fn usage_errors_exit_two() {
    sombor().args(["so"]).assert().code(2);
    sombor()
        .args(["so", "--graph6", "D?{", "--family", "path", "--n", "3"])
        .assert()
        .code(2);
    sombor().args(["so", "--graph6", "x"]).assert().code(2);
    sombor()
        .args(["so", "--family", "knk", "--n", "5"])
        .assert()
        .code(2);
    sombor()
        .args(["extremal", "--n", "12", "--k", "1"])
        .assert()
        .code(2);
}

#[test]
fn qspr_tolerance_overrides() {
    sombor()
        .args(["qspr", "--check", "--r2-tol", "1e-3"])
        .assert()
        .success();
    sombor()
        .args(["qspr", "--check", "--r2-tol", "0"])
        .assert()
        .code(2);
    sombor().args(["qspr", "--r2-tol", "1e-3"]).assert().code(2);
}
