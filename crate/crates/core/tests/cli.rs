use std::process::{Command, Output};

fn oddtl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddtl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&oddtl(&["dims", "3", "3"])), "5");
    assert_eq!(stdout(&oddtl(&["eval", "cap * cup"])), "(-q + q^-1) · [empty]");
    assert_eq!(stdout(&oddtl(&["decompose", "2"])), "V(2) ⊕ ΠV(0)");
}

#[test]
fn flags() {
    assert_eq!(stdout(&oddtl(&["eval", "cap * cup", "--classical"])), "(-q - q^-1) · [empty]");
    assert_eq!(stdout(&oddtl(&["eval", "cap * cup", "--q", "2"])), "(-3/2) · [empty]");
    assert_eq!(stdout(&oddtl(&["eval", "cap * cup", "--q", "-3/2"])), "(5/6) · [empty]");
    assert_eq!(stdout(&oddtl(&["--category", "brauer", "eval", "cap * cup"])), "0");
    assert_eq!(stdout(&oddtl(&["--category", "brauer", "dims", "2", "2"])), "3");
    let json = stdout(&oddtl(&["decompose", "3", "--output", "json"]));
    assert_eq!(json, r#"{"module":"V^3","summands":[{"k":3,"pi":0,"mult":1},{"k":1,"pi":1,"mult":2}]}"#);
}

#[test]
fn json_is_byte_stable() {
    let a = oddtl(&["jw", "3", "--output", "json"]);
    let b = oddtl(&["jw", "3", "--output", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["source"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn failures_are_json_with_nonzero_exit() {
    for args in [
        &["eval", "cap * cap"][..],
        &["eval", "cap *"],
        &["eval", "cap * cup", "--q", "-1"],
        &["eval", "cap * cup", "--q", "zero"],
        &["--category", "brauer", "jw", "2"],
        &["eval", "cross"],
        &["nonsense"],
    ] {
        let o = oddtl(args);
        assert!(!o.status.success(), "{args:?}");
        let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap_or_else(|_| panic!("{args:?}"));
        assert!(err["error"].is_string(), "{args:?}");
    }
}

#[test]
fn check_commands_exit_zero_when_passing() {
    let o = oddtl(&["k0"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS"));
    let o = oddtl(&["envelope-check", "--max-n", "4", "--output", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
