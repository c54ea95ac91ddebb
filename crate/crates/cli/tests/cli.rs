use std::process::{Command, Output};

fn toricrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toricrank")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_k33() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = toricrank(&["analyze", "--kmn", "3", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("mu = 9"));
    assert!(text.contains("ht = 4"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["mu"], 9);
    assert_eq!(v["height"], 4);
    assert_eq!(v["bar"], 9);
    assert_eq!(v["araG"], 9);
    assert_eq!(v["ara_bracket"], serde_json::json!([4, 9]));
}

#[test]
fn analyze_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    std::fs::write(&file, "# house with a diagonal\n1 2\n2 3\n3 4\n4 1\n1 5\n5 2\n2 4\n").unwrap();
    let a = toricrank(&["analyze", file.to_str().unwrap()]);
    let b = toricrank(&["analyze", file.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_k6() {
    let o = toricrank(&["selftest", "--kn", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap() == "PASS");
}

#[test]
fn fibers_k4() {
    let o = toricrank(&["fibers", "--kn", "4", "--degree", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("3 monomials"));
    assert!(text.contains("x12*x34"));
}

#[test]
fn complex_and_generators() {
    let o = toricrank(&["complex", "--kn", "4", "--j", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("delta_0,1 = 2"));
    let o = toricrank(&["generators", "--cycle", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mu = 1"));
    let o = toricrank(&["circuits", "--kn", "4"]);
    assert!(stdout(&o).starts_with("3 circuits"));
    let o = toricrank(&["cycles", "--kmn", "2", "3"]);
    assert!(stdout(&o).starts_with("3 even cycles"));
}

#[test]
fn exit_codes() {
    assert_eq!(toricrank(&["frobnicate", "--kn", "4"]).status.code(), Some(2));
    assert_eq!(toricrank(&["analyze", "--kn", "4", "--bogus"]).status.code(), Some(2));
    assert_eq!(toricrank(&["analyze", "--kn", "4", "--cycle", "4"]).status.code(), Some(2));
    assert_eq!(toricrank(&["analyze", "/nonexistent/graph.txt"]).status.code(), Some(1));
    let o = toricrank(&["complex", "--kn", "4", "--j", "x"]);
    assert_eq!(o.status.code(), Some(1));
    let o = toricrank(&["fibers", "--kn", "4", "--degree", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn malformed_file_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "1 1\n").unwrap();
    let o = toricrank(&["analyze", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}
