use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hlpa_core::hypergraph::samples;
use serde_json::Value;
use tempfile::TempDir;

fn hlpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlpa")).args(args).output().unwrap()
}

fn hlpa_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlpa"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn fixture() -> (TempDir, String) {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "two.hg", &samples::two_by_two().serialize());
    (dir, p.to_string_lossy().into_owned())
}

#[test]
fn gkdim_text() {
    let (_d, f) = fixture();
    let o = hlpa(&["gkdim", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "GKdim = 1; chain: [h[2,2] h*[2,2]]");
}

#[test]
fn gkdim_json() {
    let (_d, f) = fixture();
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["gkdim", &f, "--json"]))).unwrap();
    assert_eq!(v["kind"], "finite");
    assert_eq!(v["d"], 1);
    assert_eq!(v["chain"][0]["word"], "h[2,2] h*[2,2]");
}

#[test]
fn normal_form() {
    let (_d, f) = fixture();
    let o = hlpa(&["nf", &f, "-e", "h[1,1] * h*[1,1]"]);
    assert_eq!(stdout(&o).trim_end(), "v1 - h[1,2] h*[1,2]");
    let o = hlpa(&[
        "nf",
        &f,
        "-e",
        "h[1,1] * h*[1,1]",
        "--strategy",
        "rightmost",
        "--field",
        "fp:5",
    ]);
    assert_eq!(stdout(&o).trim_end(), "v1 + 4 h[1,2] h*[1,2]");
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["nf", &f, "-e", "h[1,1] * h*[1,1]", "--json"]))).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["valuation"], 2);
}

#[test]
fn multiply() {
    let (_d, f) = fixture();
    let o = hlpa(&["mul", &f, "h*[1,2]", "h[1,2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "w2 - h*[2,2] h[2,2]");
}

#[test]
fn missing_file() {
    let o = hlpa(&["check", "missing.hg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("missing.hg"));
}

#[test]
fn usage_errors() {
    let (_d, f) = fixture();
    assert_eq!(hlpa(&["gkdim"]).status.code(), Some(2));
    assert_eq!(hlpa(&["basis", &f]).status.code(), Some(2));
    assert_eq!(hlpa(&["nf", &f, "-e", "v1", "--field", "fp:6"]).status.code(), Some(2));
}

#[test]
fn domain_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.hg", "vertices: a\nedge h: a -> b\n");
    let o = hlpa(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error:"));
    let (_d, f) = fixture();
    let o = hlpa(&["nf", &f, "-e", "h[3,1]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn step_budget_from_environment() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "l23.hg", &samples::leavitt_2_3().serialize());
    let o = hlpa_env(&["quasicycles", f.to_str().unwrap()], "HLPA_MAX_STEPS", "3");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget exhausted"));
}

#[test]
fn basis_counts_and_list() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "l.hg", &samples::laurent().serialize());
    let f = f.to_str().unwrap();
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["basis", f, "--max-len", "3", "--json"]))).unwrap();
    assert_eq!(v["cumulative"], serde_json::json!(["1", "3", "5", "7"]));
    let o = hlpa(&["basis", f, "--max-len", "1", "--list"]);
    assert_eq!(stdout(&o), "u\nl[1,1]\nl*[1,1]\n");
}

#[test]
fn quasicycles_and_props() {
    let (_d, f) = fixture();
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["quasicycles", &f, "--json"]))).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["classes"], 1);
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["props", &f, "--json"]))).unwrap();
    assert_eq!(v["conditions"]["lv"], true);
    let prime = v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["property"] == "prime")
        .unwrap();
    assert_eq!(prime["verdict"], "Yes");
    let text = stdout(&hlpa(&["props", &f]));
    assert!(text.lines().any(|l| l.starts_with("domain") && l.contains("No")));
}

#[test]
fn vmonoid_k0_and_equality() {
    let (_d, f) = fixture();
    let o = hlpa(&["vmonoid", &f, "--k0", "--equal", "v1 + v2", "w1 + w2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("h: v1 + v2 = w1 + w2"));
    assert!(s.contains("K0 = Z^3"));
    assert!(s.contains("equal in 1 step\n  h ->: w1 + w2"));
    let v: Value = serde_json::from_str(&stdout(&hlpa(&["vmonoid", &f, "--k0", "--json"]))).unwrap();
    assert_eq!(v["k0"]["free_rank"], 3);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn graded_and_cover() {
    let (_d, f) = fixture();
    let g = hlpa(&["vmonoid", &f, "--graded", "--window", "1", "--json"]);
    let cover = hlpa(&["cover", &f, "--window", "1"]);
    assert_eq!(cover.status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let cf = write(dir.path(), "cover.hg", &stdout(&cover));
    let c = hlpa(&["vmonoid", cf.to_str().unwrap(), "--json"]);
    let a: Value = serde_json::from_str(&stdout(&g)).unwrap();
    let b: Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(a, b);
    let o = hlpa(&["verify-cover", &f, "--window", "1", "--trials", "5", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn weights_file() {
    let (d, f) = fixture();
    let wf = write(d.path(), "w.txt", "h 1 1 : 1\nh 1 2 : 1\nh 2 1 : 1\nh 2 2 : 1\n");
    let o = hlpa(&["cover", &f, "--window", "0", "--weights", wf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let bad = write(d.path(), "bad.txt", "h 1 1 : 1\nh 1 2 : 0\nh 2 1 : 0\nh 2 2 : 0\n");
    let o = hlpa(&["cover", &f, "--window", "1", "--weights", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn convert_formats() {
    let dir = TempDir::new().unwrap();
    let wg = write(dir.path(), "l23.wg", "vertices: u\nemits u weight 2: u u u\n");
    let o = hlpa(&["convert", wg.to_str().unwrap()]);
    assert_eq!(stdout(&o), "vertices: u\nedge hu: u u -> u u u\n");
    let sg = write(dir.path(), "l12.sg", "vertices: u\ngroup X at u: u u\n");
    let o = hlpa(&["convert", sg.to_str().unwrap()]);
    assert_eq!(stdout(&o), "vertices: u\nedge hX: u -> u u\n");
    let back = write(dir.path(), "again.hg", &stdout(&o));
    assert_eq!(
        stdout(&hlpa(&["check", back.to_str().unwrap()])).trim_end(),
        "ok: 1 vertices, 1 hyperedges, 4 letters"
    );
    let reparsed = hlpa_core::Hypergraph::parse(&stdout(&o)).unwrap();
    assert_eq!(reparsed.serialize(), stdout(&o));
    // .sg input is accepted directly by other commands.
    let o = hlpa(&["gkdim", sg.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("exponential growth"));
}

#[test]
fn output_is_deterministic() {
    let (_d, f) = fixture();
    for args in [
        vec!["props", &f, "--json"],
        vec!["verify-cover", &f, "--window", "1", "--trials", "8"],
    ] {
        assert_eq!(hlpa(&args).stdout, hlpa(&args).stdout);
    }
}
