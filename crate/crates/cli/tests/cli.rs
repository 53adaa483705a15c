use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fourqubit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourqubit")).args(args).output().unwrap()
}

fn piped(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fourqubit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("fourqubit-cli-{}-{name}", std::process::id()))
}

#[test]
fn ghz_monotones() {
    let v = json(&fourqubit(&["monotones", "--state", "phi1"]));
    for (key, want) in [("F1", 1.0), ("F2", 1.0), ("F3", 0.5), ("F2prime", 3.0)] {
        assert!((num(&v[key]) - want).abs() < 1e-10, "{key}");
    }
    assert_eq!(v["class"], "all_nonzero");
}

#[test]
fn relabeling_through_a_pipe_changes_f2_only() {
    let before = json(&fourqubit(&["monotones", "--state", "phi3"]));
    let permuted = fourqubit(&["permute", "--state", "phi3", "--perm", "1,4,3,2"]);
    assert!(permuted.status.success());
    let after = json(&piped(&["monotones"], &permuted.stdout));
    assert!(num(&before["F2"]) < 1e-10);
    assert!((num(&after["F2"]) - 1.0).abs() < 1e-10);
    assert!((num(&after["F2prime"]) - 1.0).abs() < 1e-10);
    assert!((num(&before["F2prime"]) - 1.0).abs() < 1e-10);
}

#[test]
fn symmetric_relabeling_leaves_phi3_alone() {
    let permuted = fourqubit(&["permute", "--state", "phi3", "--perm", "2,1,3,4"]);
    let direct = fourqubit(&["permute", "--state", "phi3", "--perm", "1,2,3,4"]);
    assert_eq!(permuted.stdout, direct.stdout);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--suites", "table2,identities", "--seed", "7", "--trials", "500"];
    let a = fourqubit(&args);
    let b = fourqubit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["overall"], true);
    assert_eq!(v["suites"]["identities"]["trials"], 500);
    assert!(v["suites"]["table2"]["first_fail_seed"].is_null());
}

#[test]
fn verify_failure_exits_one() {
    // A tolerance below rounding error cannot be met.
    let out = fourqubit(&["verify", "--suites", "identities", "--trials", "5", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], false);
    assert_eq!(v["suites"]["identities"]["first_fail_seed"], 0);
}

#[test]
fn malformed_input_exits_two() {
    let path = temp_path("bad.json");
    std::fs::write(&path, "{\"amplitudes\": [[1, 0]").unwrap();
    let out = fourqubit(&["invariants", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    std::fs::remove_file(path).unwrap();

    for args in [
        &["invariants", "--state", "phi1", "--in", "x.json"][..],
        &["invariants", "--state", "nope"],
        &["permute", "--state", "phi1", "--perm", "1,1,2,3"],
        &["classify", "--state", "pi1", "--params", "1,2,3"],
        &["pattern", "eval", "F2", "--state", "phi1", "--naive"],
        &["apply", "--state", "phi1", "--gates", "X,X,X,Q"],
    ] {
        assert_eq!(fourqubit(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(piped(&["monotones"], b"").status.code(), Some(2));
}

#[test]
fn state_round_trip_through_files() {
    let path = temp_path("state.json");
    let out = fourqubit(&["random", "--seed", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let again = fourqubit(&["permute", "--in", path.to_str().unwrap(), "--perm", "1,2,3,4"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), written);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn cluster_params_and_classification() {
    let v = json(&fourqubit(&["classify", "--state", "pi1", "--params", "0.5,0.5,0.5,0.5"]));
    assert_eq!(v["class"], "cluster_like");
    let v = json(&fourqubit(&["classify", "--state", "product_basis"]));
    assert_eq!(v["class"], "product_like");
    let v = json(&fourqubit(&["monotones", "--state", "pi2", "--params", "1,1+0j,1-0j,0+1j"]));
    assert!((num(&v["F2prime"]) - 1.0).abs() < 1e-10);
}

#[test]
fn local_unitaries_preserve_monotones() {
    let start = fourqubit(&["random", "--seed", "11"]);
    let moved = piped(&["apply", "--random", "4", "--kind", "unitary"], &start.stdout);
    let a = json(&piped(&["monotones"], &start.stdout));
    let b = json(&piped(&["monotones"], &moved.stdout));
    for key in ["F1", "F2", "F3", "F4", "F5", "F2prime"] {
        assert!((num(&a[key]) - num(&b[key])).abs() < 1e-9, "{key}");
    }
}

#[test]
fn pattern_show_is_stable() {
    let out = fourqubit(&["pattern", "show", "H"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "slot1: (1,2) | slot2: (1,2) | slot3: (1,2) | slot4: (1,2) weight=0.5\n"
    );
    let list = String::from_utf8(fourqubit(&["pattern", "show"]).stdout).unwrap();
    assert!(list.lines().any(|l| l == "F3"));
}

#[test]
fn pattern_eval_matches_invariants() {
    let inv = json(&fourqubit(&["invariants", "--state", "phi1"]));
    let fast = json(&fourqubit(&["pattern", "eval", "L", "--state", "phi1"]));
    let naive = json(&fourqubit(&["pattern", "eval", "L", "--state", "phi1", "--naive"]));
    for v in [&fast, &naive] {
        assert!((num(&v["value"][0]) - num(&inv["L"][0])).abs() < 1e-12);
    }
    assert_eq!(naive["evaluator"], "naive");
}

#[test]
fn text_format_is_aligned() {
    let out = fourqubit(&["invariants", "--state", "phi2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("name"));
    let col = lines[0].find("re").unwrap();
    assert!(lines[1..].iter().all(|l| l.as_bytes()[col - 2] == b' '));
}

#[test]
fn normalize_flag() {
    let path = temp_path("unnormalized.txt");
    let mut body = String::from("2 0\n");
    body.push_str(&"0 0\n".repeat(14));
    body.push_str("2 0\n");
    std::fs::write(&path, body).unwrap();
    let p = path.to_str().unwrap();
    let raw = json(&fourqubit(&["invariants", "--in", p]));
    let unit = json(&fourqubit(&["invariants", "--in", p, "--normalize"]));
    assert!((num(&raw["H"][0]) - 4.0).abs() < 1e-12);
    assert!((num(&unit["H"][0]) - 0.5).abs() < 1e-12);
    std::fs::remove_file(path).unwrap();
}
