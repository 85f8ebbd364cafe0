use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn h4e8(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h4e8"))
        .args(args)
        .current_dir(dir)
        .env("RUST_BACKTRACE", "0")
        .output()
        .expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap()
}

#[test]
fn verify_isomorphism_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = h4e8(&["verify", "--isomorphism", "-o", "r.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_json(&dir.path().join("r.json"));
    assert_eq!(r["all_pass"], true);
    assert!(r["checks"].as_array().unwrap().len() >= 15);
    assert!(out.stdout.is_empty());
}

#[test]
fn json_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert!(h4e8(&["generate", "--group", "E8", "--orbit", "421", "--edges", "-o", "a.json"], p).status.success());
    assert!(h4e8(&["export", "--input", "a.json", "-o", "b.json"], p).status.success());
    assert!(h4e8(&["export", "--input", "b.json", "-o", "c.json"], p).status.success());
    let a = std::fs::read(p.join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(p.join("b.json")).unwrap());
    assert_eq!(a, std::fs::read(p.join("c.json")).unwrap());
    let m = &read_json(&p.join("a.json"))["metadata"];
    assert_eq!(m["vertex_count"], 240);
    assert_eq!(m["edge_count"], 6720);
    assert_eq!(m["tool"], "h4e8");
    assert_eq!(m["config_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    for name in ["x.svg", "y.svg"] {
        let o = h4e8(&["project", "--petrie", "--input", "421", "--format", "svg", "--cull-fraction", "0.53", "-o", name], p);
        assert!(o.status.success());
    }
    let x = std::fs::read(p.join("x.svg")).unwrap();
    assert_eq!(x, std::fs::read(p.join("y.svg")).unwrap());
    let a = h4e8(&["fold", "--format", "csv"], p).stdout;
    let b = h4e8(&["fold", "--format", "csv"], p).stdout;
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 242);
}

#[test]
fn petrie_svg_carries_the_basis() {
    let dir = tempfile::tempdir().unwrap();
    let o = h4e8(&["project", "--petrie", "--input", "421", "--format", "svg", "--cull-fraction", "0.53"], dir.path());
    assert!(o.status.success());
    let svg = String::from_utf8(o.stdout).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("version=\"1.1\""));
    let x_line = svg.lines().find(|l| l.starts_with("<basis name=\"X\">")).unwrap();
    let xs: Vec<f64> = x_line
        .trim_start_matches("<basis name=\"X\">")
        .trim_end_matches("</basis>")
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    let printed = [0.0, 0.252, 0.427, -0.319, 0.319, 0.427, 0.781, 0.0];
    for (a, b) in xs.iter().zip(printed) {
        assert!((a - b).abs() < 1e-3, "{} vs {}", a, b);
    }
    assert!(svg.contains("edges=\"6720\" drawn-edges=\"3159\""));
    assert_eq!(svg.matches("<circle").count(), 240);
}

#[test]
fn platonic_off_has_one_object_per_shell() {
    let dir = tempfile::tempdir().unwrap();
    let o = h4e8(&["project", "--platonic", "--input", "421", "--format", "off"], dir.path());
    assert!(o.status.success());
    let t = String::from_utf8(o.stdout).unwrap();
    assert_eq!(t.matches("\nOFF\n").count(), 8);
    assert!(t.starts_with("# h4e8 "));
}

#[test]
fn unknown_config_keys_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("bad.json"), r#"{"command":"tables","colour":"red"}"#).unwrap();
    let o = h4e8(&["--config", "bad.json"], p);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(o.stderr.trim_ascii()).unwrap();
    assert!(err["error"].as_str().unwrap().contains("colour"));
    std::fs::write(p.join("good.json"), r#"{"command":"tables","format":"csv"}"#).unwrap();
    let o = h4e8(&["--config", "good.json"], p);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stdout).unwrap().contains("e1,+1,-0,+3,-2"));
}

#[test]
fn failed_verification_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert!(h4e8(&["generate", "--group", "E8", "--orbit", "421", "--edges", "-o", "a.json"], p).status.success());
    assert!(h4e8(&["verify", "--input", "a.json", "-o", "ok.json"], p).status.success());
    let mut d = read_json(&p.join("a.json"));
    // drop one edge: the list is no longer complete
    d["edges"].as_array_mut().unwrap().pop();
    d["metadata"]["edge_count"] = 6719.into();
    std::fs::write(p.join("cut.json"), serde_json::to_vec(&d).unwrap()).unwrap();
    let o = h4e8(&["verify", "--input", "cut.json", "-o", "r.json"], p);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(read_json(&p.join("r.json"))["all_pass"], false);
}

#[test]
fn bad_selectors_fail() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(h4e8(&["generate", "--construction", "Q"], p).status.code(), Some(2));
    assert_eq!(h4e8(&["generate", "--group", "G2", "--orbit", "10"], p).status.code(), Some(2));
    assert_eq!(h4e8(&["project", "--petrie", "--input", "421", "--format", "off"], p).status.code(), Some(2));
    assert_eq!(h4e8(&["export", "--input", "missing.json"], p).status.code(), Some(2));
}

#[test]
fn construction_dump() {
    let dir = tempfile::tempdir().unwrap();
    let o = h4e8(&["generate", "--construction", "dual-snub"], dir.path());
    assert!(o.status.success());
    let d: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(d["metadata"]["vertex_count"], 144);
    assert_eq!(d["vertices"][0].as_array().unwrap().len(), 4);
    assert_eq!(d["approx"].as_array().unwrap().len(), 144);
}

#[test]
fn large_orbit_with_progress_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let o = h4e8(&["generate", "--group", "E8", "--orbit", "142", "--edges", "-o", "o.json"], dir.path());
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("edges:"));
    let m = &read_json(&dir.path().join("o.json"))["metadata"];
    assert_eq!(m["vertex_count"], 17280);
    assert_eq!(m["edge_count"], 483840);
}
