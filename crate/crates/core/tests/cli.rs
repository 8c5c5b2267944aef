use std::process::{Command, Output};

fn twistlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_suite_exits_zero() {
    let o = twistlab(&["verify", "spacetime"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("== spacetime [PASS]"));
    assert!(out.ends_with("summary: 1 suites, 3 checks, 3 passed, 0 failed, 0 flagged\n"));
}

#[test]
fn failing_suite_exits_nonzero_with_diff() {
    let o = twistlab(&["verify", "coproduct", "--algebra", "sl2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("  FAIL  closure-zeta0-control/sl2"));
    assert!(out.contains("- expected: "));
    assert!(out.contains("+ actual:   "));
}

#[test]
fn flagged_does_not_fail() {
    let o = twistlab(&["verify", "cbh", "--order", "2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FLAG  displayed-example/v2-w"));
}

#[test]
fn unknown_suite_and_bad_options() {
    let o = twistlab(&["verify", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("valid suites: bplus, cbh,"));
    assert_eq!(twistlab(&["verify", "lie", "--order", "7"]).status.code(), Some(2));
    assert_eq!(twistlab(&["verify", "lie", "--alpha", "x"]).status.code(), Some(2));
    assert_eq!(twistlab(&["verify", "lie", "--algebra", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "duflo", "mackey", "--format", "json", "--jobs", "2"];
    let (a, b) = (twistlab(&args), twistlab(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.iter().map(|s| s["name"].as_str().unwrap()).collect::<Vec<_>>(), ["duflo", "mackey"]);
    let check = &suites[0]["checks"][0];
    for key in ["name", "status", "expected", "actual"] {
        assert!(check[key].is_string());
    }
    assert_eq!(check["runtime_ms"], 0);
}
