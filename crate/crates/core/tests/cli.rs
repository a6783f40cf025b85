use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_compsuper")).args(args).output().expect("spawn");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn check_okubo() {
    let (code, _) = run(&["check", "--construction", "okubo-nst", "--field", "GF(2)"]);
    assert_eq!(code, 0);
}

#[test]
fn field_condition_is_a_usage_error() {
    let (code, _) = run(&["catalog", "verify", "eq1", "--field", "GF(2)"]);
    assert_eq!(code, 2);
}

#[test]
fn universal_group_of_eq4() {
    let (code, out) = run(&["universal-group", "--catalog", "eq4", "--field", "GF(3)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Z3");
}

#[test]
fn catalog_list_has_every_entry() {
    let (code, out) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 29);
    assert!(out.contains("eq1 "));
}

#[test]
fn unknown_entry() {
    let (code, _) = run(&["catalog", "verify", "nope"]);
    assert_eq!(code, 2);
}
