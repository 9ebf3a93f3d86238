use std::io::Write;
use std::process::{Command, Output, Stdio};

fn oddind(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_oddind"))
        .args(args)
        .env_remove("ODDIND_BUDGET_SECS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_piped_into_compute() {
    let g = oddind(&["gen", "petersen"], None);
    assert!(g.status.success());
    let out = oddind(&["--json", "compute", "alpha-od", "-"], Some(&stdout(&g)));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], true);
}

#[test]
fn compute_inline_family() {
    let out = oddind(&["compute", "chi-so", "cycle 5"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("5"));
}

#[test]
fn dimacs_round_trip_through_stdin() {
    let g = oddind(&["--format", "dimacs", "gen", "hypercube", "3"], None);
    assert!(stdout(&g).contains("p edge 8 12"));
    let out = oddind(&["--json", "--format", "dimacs", "compute", "alpha", "-"], Some(&stdout(&g)));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 4);
}

#[test]
fn verify_set_exit_codes() {
    // in C_6 the set {0, 3} is odd independent; {0, 2} leaves vertex 1 with two neighbours
    assert_eq!(oddind(&["verify-set", "cycle 6", "0", "3"], None).status.code(), Some(0));
    assert_eq!(oddind(&["verify-set", "cycle 6", "0", "2"], None).status.code(), Some(1));
}

#[test]
fn verify_coloring_rejects_even_class() {
    assert_eq!(oddind(&["verify-coloring", "cycle 4", "0", "1", "0", "1"], None).status.code(), Some(1));
    assert_eq!(oddind(&["verify-coloring", "cycle 4", "0", "1", "2", "3"], None).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(oddind(&["compute", "alpha-od", "kneser 3 2"], None).status.code(), Some(2));
    assert_eq!(oddind(&["compute", "nonsense", "petersen"], None).status.code(), Some(2));
    assert_eq!(oddind(&["verify-set", "cycle 4", "9"], None).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = oddind(&["--budget", "1", "compute", "chi-so", "hoffman-singleton"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("interval"));
}

#[test]
fn bounds_json_all_satisfied() {
    let out = oddind(&["--json", "bounds", "petersen"], None);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let entries = v.as_array().or_else(|| v["entries"].as_array()).unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["satisfied"] == true));
}

#[test]
fn deterministic_suite_is_byte_identical() {
    let args = ["--deterministic", "paper-suite", "--section", "2"];
    let a = oddind(&args, None);
    let b = oddind(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("PASS"));
}
