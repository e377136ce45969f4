use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_sigma-triples");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_bfile_is_bit_exact() {
    let o = run(&["expand", "-N", "2", "--format", "bfile"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1\n1 1\n2 4\n");
    assert_eq!(stdout(&run(&["expand", "--order", "0"])), "0 1\n");
}

#[test]
fn expand_json_carries_method_and_order() {
    let o = run(&["expand", "-N", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["method"], "product");
    assert_eq!(v["coefficients"], serde_json::json!([1, 1, 4, 8, 21]));
    let bare = run(&["expand", "-N", "4", "--format", "json", "--no-meta"]);
    assert_eq!(stdout(&bare), "[1,1,4,8,21]\n");
}

#[test]
fn all_pipelines_print_the_same_bfile() {
    let a = stdout(&run(&["expand", "-N", "7"]));
    assert_eq!(stdout(&run(&["classes", "-N", "7"])), a);
    assert_eq!(stdout(&run(&["classes", "-N", "7", "--product-form"])), a);
    assert_eq!(stdout(&run(&["brute", "-N", "7"])), a);
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["brute", "-N", "3", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["method"], "brute");
}

#[test]
fn csv_output() {
    assert_eq!(
        stdout(&run(&["classes", "-N", "2", "--format", "csv"])),
        "n,a(n)\n0,1\n1,1\n2,4\n"
    );
}

#[test]
fn out_file_and_unwritable_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    let o = run(&["expand", "-N", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1\n1 1\n2 4\n3 8\n");

    let bad = dir.path().join("missing").join("seq.txt");
    let o = run(&["expand", "-N", "3", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_succeeds() {
    let o = run(&["verify", "-N", "30", "-K", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("verified\n"));
}

#[test]
fn verify_refuses_above_cap() {
    let o = run(&["verify", "-N", "12", "-K", "9"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--cent-cap"));
    let o = run(&["brute", "-N", "6", "--cent-cap", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_negative_control() {
    let o = run(&["verify", "-N", "12", "-K", "5", "--sigma-override", "7=9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first disagreement at coefficient n = 7"));
}

#[test]
fn verify_rejects_brute_range_above_order() {
    assert_eq!(run(&["verify", "-N", "2", "-K", "4"]).status.code(), Some(2));
}

#[test]
fn wreath_reports() {
    let o = run(&["wreath", "-t", "2", "-m", "2", "--brute"]);
    assert_eq!(stdout(&o), "k=5, brute=5, match\n");
    assert_eq!(stdout(&run(&["wreath", "-t", "1", "-m", "6"])), "k=11\n");
    assert_eq!(stdout(&run(&["wreath", "-t", "7", "-m", "0"])), "k=1\n");
    let o = run(&["wreath", "-t", "3", "-m", "5", "--brute"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["wreath", "-t", "3", "-m", "5", "--brute", "--wreath-cap", "30000"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bound_check_exit_codes() {
    let o = run(&["bound-check", "--d-max", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["bound-check", "--d-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lhs = 1 and rhs = 1"));
}

#[test]
fn log_check_and_growth() {
    let o = run(&["log-check", "-N", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["growth", "-N", "4"]);
    let text = stdout(&o);
    assert!(text.contains("1 1 1.000000"));
    assert!(text.contains("4 21 2.140695"));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["expand"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "-N", "-3"]).status.code(), Some(2));
    assert_eq!(run(&["bound-check", "--d-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
