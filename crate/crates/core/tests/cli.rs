use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rooted-chromatic"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const P3: &str = "3 2\n0 1\n1 2\n";
const P3_MIDDLE: &str = "root 1\n3 2\n0 1\n1 2\n";

#[test]
fn compute_path_x_in_three_variables() {
    let out = run(
        &["compute", "-", "--invariant", "X", "--colors", "2"],
        Some(P3),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 7);
    assert!(terms.contains(&json!({"exp": [1, 1, 1], "coeff": "6"})));
    assert!(terms.contains(&json!({"exp": [0, 1, 2], "coeff": "1"})));
}

#[test]
fn compute_rooted_u_of_middle_rooted_path() {
    let out = run(&["compute", "-", "--invariant", "Ur"], Some(P3_MIDDLE));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        json!({"namespace": "part-size", "terms": [
            {"x": [], "y": 0, "z": 3, "coeff": "1"},
            {"x": [1], "y": 0, "z": 2, "coeff": "2"},
            {"x": [1, 1], "y": 0, "z": 1, "coeff": "1"},
        ]})
    );
}

#[test]
fn compute_chi_of_single_vertex() {
    let out = run(&["compute", "-", "--invariant", "chi"], Some("1 0\n"));
    assert_eq!(stdout_json(&out)["coeffs"], json!(["0", "1"]));
}

#[test]
fn compute_is_byte_identical_across_runs() {
    let args = ["compute", "-", "--invariant", "X0", "--basis", "mtilde"];
    let a = run(&args, Some(P3_MIDDLE));
    let b = run(&args, Some(P3_MIDDLE));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout_json(&a),
        json!({"basis": "mtilde", "terms": [
            {"z": 1, "partition": [1, 1], "coeff": "1"},
            {"z": 1, "partition": [2], "coeff": "1"},
        ]})
    );
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(
        run(&["compute", "-", "--invariant", "nope"], Some(P3))
            .status
            .code(),
        Some(2)
    );
    let bad = run(&["compute", "-", "--invariant", "X"], Some("3 2\n0 1\n"));
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("declared 2 edges"));
    let line = run(&["compute", "-", "--invariant", "X"], Some("3 1\n0 x\n"));
    assert!(String::from_utf8_lossy(&line.stderr).contains("line 2"));
    assert_eq!(
        run(&["verify", "no-such-suite"], None).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn resource_guard_exits_3() {
    assert_eq!(
        run(&["verify", "epositivity", "--max-n", "9"], None)
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["enumerate", "--kind", "graphs", "--n", "12"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_report_is_deterministic_across_job_counts() {
    let a = run(
        &[
            "verify",
            "distinguish-rooted",
            "--max-n",
            "8",
            "--jobs",
            "1",
        ],
        None,
    );
    let b = run(
        &[
            "verify",
            "distinguish-rooted",
            "--max-n",
            "8",
            "--jobs",
            "3",
        ],
        None,
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["instances"], json!(200));
    assert_eq!(v["failures"], json!([]));
}

#[test]
fn only_reruns_a_single_instance() {
    let listed = run(&["enumerate", "--kind", "rooted-graphs", "--n", "4"], None);
    let lines = String::from_utf8(listed.stdout).unwrap();
    assert_eq!(lines.lines().count(), 20);
    let line = lines.lines().nth(7).unwrap();
    let out = run(&["verify", "pointed", "--max-n", "4", "--only", line], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["instances"], json!(1));
    let none = run(
        &["verify", "pointed", "--max-n", "4", "--only", "root 0; 9 0"],
        None,
    );
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn search_and_certify() {
    let out = run(&["search", "--kind", "X-unrooted", "--n", "5"], None);
    let v = stdout_json(&out);
    assert_eq!(v["collisions"].as_array().unwrap().len(), 1);
    let cert = run(&["certify", "-"], Some("3 3\n0 1\n1 2\n0 2\n"));
    assert_eq!(cert.status.code(), Some(0));
    let c = stdout_json(&cert);
    assert_eq!((c["k"].clone(), c["p"].clone()), (json!(3), json!(5)));
    assert_eq!(c["report"]["satisfied"], json!(true));
}

#[test]
fn writes_to_out_file() {
    let path =
        std::env::temp_dir().join(format!("rooted-chromatic-cli-{}.txt", std::process::id()));
    let out = run(
        &[
            "enumerate",
            "--kind",
            "free-trees",
            "--n",
            "6",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
}
