use std::path::PathBuf;
use std::process::{Command, Output};

fn mtcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtcodes")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn machine_value(text: &str, key: &str) -> String {
    let prefix = format!("{key}=");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .to_string()
}

fn temp_spec(name: &str, body: &str) -> String {
    let p = std::env::temp_dir().join(format!("mtcodes-cli-{}-{name}.spec", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_coprime_quotient_code() {
    let o = mtcodes(&["analyze", &fixture("f4_coprime_quotients.spec"), "--machine"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(machine_value(&out, "verdict"), "LCD");
    assert_eq!(machine_value(&out, "dim"), "5");
    assert_eq!(machine_value(&out, "g_2"), "1 + x + w*x^2 + x^3");
}

#[test]
fn analyze_repeated_root_code() {
    let o = mtcodes(&["analyze", &fixture("f5_repeated_root.spec"), "--machine"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(machine_value(&out, "verdict"), "Inconclusive");
    assert_eq!(machine_value(&out, "exact_lcd"), "false");
    assert_eq!(machine_value(&out, "hull_dim"), "1");
}

#[test]
fn machine_output_parses_back() {
    let o = mtcodes(&["analyze", &fixture("f3_involutive_shifts.spec"), "--machine", "--mindist"]);
    let r = mtcodes::report::parse_machine(&stdout(&o)).unwrap();
    assert_eq!(r.dimension, 10);
    assert_eq!(r.min_distance, mtcodes::report::Distance::Exact(2));
}

#[test]
fn dual_flag_analyzes_dual_code() {
    let o = mtcodes(&["analyze", &fixture("f5_two_generator.spec"), "--dual", "--machine"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(machine_value(&out, "dim"), "1");
    assert_eq!(machine_value(&out, "shifts"), "3,2");
}

#[test]
fn single_block_unit_generator() {
    let body = "[field]\np = 3\ndegree = 1\nmodulus = [0, 1]\n[blocks]\nlengths = [4]\nshifts = [\"2\"]\n[[generator]]\nblocks = [\"1\"]\n";
    let out = stdout(&mtcodes(&["analyze", &temp_spec("unit", body), "--machine"]));
    assert_eq!(machine_value(&out, "dim"), "4");
    // 2^2 = 1 over F_3; g = 1 is self-reciprocal and coprime to q
    assert_eq!(machine_value(&out, "verdict"), "LCD");
    assert_eq!(machine_value(&out, "legacy"), "false");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let body = "[field]\np = 5\ndegree = 1\nmodulus = [0, 1]\n[blocks]\nlengths = [3]\nshifts = [\"2\"]\n[[generator]]\nblocks = [\"1 + y\"]\n";
    let o = mtcodes(&["analyze", &temp_spec("syntax", body)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 9"), "{err}");
}

#[test]
fn semantic_errors_exit_2_with_field() {
    let base = "[field]\np = 5\ndegree = 1\nmodulus = [0, 1]\n[blocks]\nlengths = [3]\n";
    let zero = format!("{base}shifts = [\"0\"]\n[[generator]]\nblocks = [\"1\"]\n");
    let o = mtcodes(&["analyze", &temp_spec("zero", &zero)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("blocks.shifts[0]"));
    let over = format!("{base}shifts = [\"2\"]\n[[generator]]\nblocks = [\"x^3\"]\n");
    let o = mtcodes(&["analyze", &temp_spec("over", &over)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generator[0].blocks[0]"));
}

#[test]
fn suite_passes_and_lists() {
    let o = mtcodes(&["suite"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("9/9 fixtures pass"));
    let o = mtcodes(&["suite", "--list"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 9);
    assert!(out.contains("f3-involutive-shifts"));
}

#[test]
fn audit_is_reproducible() {
    let a = mtcodes(&["audit", "--trials", "200", "--seed", "9"]);
    let b = mtcodes(&["audit", "--trials", "200", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("violations                 0"));
    assert_ne!(a.stdout, mtcodes(&["audit", "--trials", "200", "--seed", "10"]).stdout);
}

#[test]
fn audit_rejects_zero_trials() {
    assert_eq!(mtcodes(&["audit", "--trials", "0"]).status.code(), Some(2));
}
