use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lyalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyalg")).args(args).output().expect("binary runs")
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("lyalg-cli-{}-{name}", std::process::id()))
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn build_then_check_sl_tensor_sl() {
    let path = temp("sl23.json");
    let o = lyalg(&["build", "ly-sl(2,3)", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let file: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(file["dim"], 24);
    assert_eq!(file["kind"], "ly");
    let o = lyalg(&["check", path.to_str().unwrap(), "--mode", "ly", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["LY1", "LY2", "LY3", "LY4", "LY5", "LY6"]);
    assert_eq!(r["passed"], true);
    std::fs::remove_file(path).ok();
}

#[test]
fn full_check_of_a2_plus_a2() {
    let o = lyalg(&["check", "tits:K,H3(K)", "--mode", "full", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert_eq!(r["dims"]["g"], 16);
    assert_eq!(r["properties"]["semisimple"], true);
    assert_eq!(r["properties"]["centroid_dim"], 2);
    assert_eq!(r["properties"]["simple"], false);
    assert_eq!(r["properties"]["type"], "A2+A2");
}

#[test]
fn full_check_of_an_ly_algebra() {
    let o = lyalg(&["check", "ly-sp2-sym(3,1)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert_eq!(r["dims"]["g"], 21);
    let p = &r["properties"];
    assert_eq!(p["g_type"], "C3");
    assert_eq!(p["inner_type"], "A1+A1");
    assert_eq!(p["inner_centroid_dim"], 2);
    assert_eq!(p["commutant_dim"], 1);
    assert_eq!(p["m_is_killing_complement"], true);
    assert_eq!(p["inner_maximal_subalgebra"], "unverified");
}

#[test]
fn corrupted_constant_is_reported() {
    let path = temp("g2.json");
    assert!(lyalg(&["build", "symp:g(TJ(k))", "--out", path.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let entry = &mut v["binary"][5][2][0][1];
    let old: String = entry.as_str().unwrap().to_string();
    *entry = Value::String(format!("{old}1"));
    std::fs::write(&path, v.to_string()).unwrap();
    let o = lyalg(&["check", path.to_str().unwrap(), "--mode", "lie", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r = stdout_json(&o);
    assert_eq!(r["checks"][0]["ok"], false);
    assert!(r["checks"][0]["detail"].as_str().unwrap().starts_with("fails on ("));
    std::fs::remove_file(path).ok();
}

#[test]
fn parse_errors_exit_with_two() {
    let path = temp("bad.json");
    std::fs::write(&path, "{\"dim\": 2,\n \"binary\": [[0, 1, [[5, \"1\"]]]]}").unwrap();
    let o = lyalg(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("binary[0][2][0][0]"));
    std::fs::write(&path, "{\"dim\": 2,\n \"binary\": [\n").unwrap();
    let o = lyalg(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    std::fs::remove_file(path).ok();
    assert_eq!(lyalg(&["build", "ly-sl(1,2)"]).status.code(), Some(2));
    assert_eq!(lyalg(&["build", "nonsense"]).status.code(), Some(2));
    assert_eq!(lyalg(&["table", "nonsense"]).status.code(), Some(2));
}

#[test]
fn build_is_byte_deterministic_and_round_trips() {
    for name in ["adjoint:sl2,ii,-1/4", "symp:TJ(H3(k))", "comp:O", "jordan:H3(K)"] {
        let a = lyalg(&["build", name]);
        let b = lyalg(&["build", name]);
        assert!(a.status.success(), "{name}");
        assert_eq!(a.stdout, b.stdout);
        let text = String::from_utf8(a.stdout).unwrap();
        let parsed = lyalg::json::StructureFile::parse(&text).unwrap();
        assert_eq!(parsed.to_json(), text, "{name}");
    }
    let v: Value = serde_json::from_slice(&lyalg(&["build", "adjoint:sl2,ii,-1/4"]).stdout).unwrap();
    assert_eq!(v["dim"], 3);
}

#[test]
fn unital_files_check() {
    for name in ["comp:O", "jordan:H3(O)", "jordan:JV(3)"] {
        let o = lyalg(&["check", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
}

#[test]
fn reports_do_not_depend_on_workers() {
    let one = lyalg(&["check", "ly-sl(2,3)", "--workers", "1", "--format", "json"]);
    let four = lyalg(&["check", "ly-sl(2,3)", "--workers", "4", "--format", "json"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn e8_builds_and_gates_jacobi() {
    let o = lyalg(&["build", "tits:O,H3(O)"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 248);
    let o = lyalg(&["check", "tits:O,H3(O)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout_json(&o);
    assert!(r["checks"].as_array().unwrap().is_empty());
    assert_eq!(r["skipped"][0], "jacobi (dim 248 needs --deep)");
    assert_eq!(r["properties"]["type"], "E8");
}

#[test]
fn tables() {
    let o = lyalg(&["table", "magic-square", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout_json(&o);
    let rows = t["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[5]["type"], "A2+A2");
    assert_eq!(rows[15]["type"], "E8");
    let o = lyalg(&["table", "symplectic", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = stdout_json(&o)["rows"].as_array().unwrap().clone();
    let types: Vec<String> = rows.iter().map(|r| format!("{}/{}", r["inder"].as_str().unwrap(), r["g"].as_str().unwrap())).collect();
    assert_eq!(types, ["A1/G2", "C3/F4", "A5/E6", "D6/E7", "E7/E8"]);
}

#[test]
fn classification_table() {
    let o = lyalg(&["table", "classification", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = stdout_json(&o)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r["ok"] == true));
}
