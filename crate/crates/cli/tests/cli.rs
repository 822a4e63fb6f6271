use serde_json::Value;
use std::process::{Command, Output};

fn satopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satopo")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write_tmp(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("satopo-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_prints_one_report() {
    let o = satopo(&["verify", "--identity", "SEKALSKI", "x*(x*y - 1)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["identity"], "SEKALSKI");
    assert_eq!(v["lhs"], "0/1");
    assert_eq!(v["rhs"], "0/1");
    assert_eq!(v["pass"], true);
    assert!(v["skipped_reason"].is_null());
}

#[test]
fn hypothesis_skips_do_not_fail() {
    let o = satopo(&["verify", "--identity", "T3.1-GE", "x*(x*y - 1)", "--alpha", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    assert!(v["skipped_reason"].as_str().unwrap().contains("proper"));
}

#[test]
fn stratified_verify_with_direction() {
    let o = satopo(&["verify", "--identity", "P5.4-ALL", "--region", "x^2 + y^2 - 1", "--v", "3/5,4/5", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pass"], true);
}

#[test]
fn small_commands() {
    let v = json(&satopo(&["chi", "x^2 + y^2", "--alpha", "1", "--flavor", "le"]));
    assert_eq!(v["chi"], 1);
    let v = json(&satopo(&["chi", "x^2 + y^2", "--alpha", "1", "--flavor", "eq", "--compact"]));
    assert_eq!(v["chi"], 0);
    let v = json(&satopo(&["link", "x*y", "--alpha", "0", "--flavor", "eq"]));
    assert_eq!(v["link_chi"], 4);
    let v = json(&satopo(&["deg-inf", "x^3 - 3*x + y^2"]));
    assert_eq!(v["deg_inf"], v["sum_local_degrees"]);
    let v = json(&satopo(&["branches", "x*(x*y - 1)"]));
    assert_eq!(v["half_branches"], 6);
    let v = json(&satopo(&["lambda", "x*(x*y - 1)"]));
    assert_eq!(v["lambda"], serde_json::json!(["0/1"]));
    assert_eq!(v["basepoint_independent"], true);
    let v = json(&satopo(&["critical", "x^2 - y^2"]));
    assert_eq!(v["critical_points"][0]["deg"], -1);
}

#[test]
fn gauss_bonnet_modes() {
    let o = satopo(&["gauss-bonnet", "--region", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["value"], "0/1");
    let o = satopo(&["gauss-bonnet", "--curve", "x^2 + y^2 - 1", "--mode", "sampled", "--n", "64"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["agrees_with_rhs"], true);
}

#[test]
fn corpus_exit_codes() {
    let good = write_tmp("good.txt", "poly: x^2 + y^2 alpha=1  # paraboloid\nregion: y\n");
    let o = satopo(&["corpus", &good]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    assert_eq!(v["summary"]["fail"], 0);

    let constant = write_tmp("constant.txt", "poly: 5\n");
    assert_eq!(satopo(&["corpus", &constant]).status.code(), Some(2));

    let broken = write_tmp("broken.txt", "poly: x^2\nbogus line\n");
    let o = satopo(&["corpus", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn builtin_corpus_passes() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/builtin.txt");
    let o = satopo(&["corpus", path, "--brief"]);
    let out = String::from_utf8_lossy(&o.stdout);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.lines().last().unwrap().contains("fail 0"));
}

#[test]
fn plot_writes_svg() {
    let path = write_tmp("plot.svg", "");
    let o = satopo(&["plot", "x^2 - y^2", "-o", &path]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}
