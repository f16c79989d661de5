use std::path::PathBuf;
use std::process::{Command, Output};

fn braidex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidex"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} line in\n{text}"))
}

#[test]
fn info_on_a_corpus_word() {
    let o = braidex(&["info", "--n", "4", "--", "-3", "-3", "-2", "1", "1", "2", "-1", "3", "-2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "admissible"), "yes");
    assert_eq!(field(&out, "components"), "1");
    assert_eq!(field(&out, "theorem"), "applies");
}

#[test]
fn info_rejects_the_forbidden_pattern() {
    let o = braidex(&["info", "--n", "4", "--", "1", "3", "1", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "admissible"), "no");
}

#[test]
fn info_on_the_empty_word() {
    let o = braidex(&["info", "--n", "3", "--"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "components"), "3");
    assert!(field(&out, "admissible").contains("degenerate"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
}

#[test]
fn invariant_of_the_hopf_link() {
    let o = braidex(&["invariant", "--n", "2", "--", "1", "1", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "closure_coefficients"), "0 1");
    assert!(field(&out, "closure_hoste").ends_with("match"));
    assert!(field(&out, "axis_hoste").ends_with("match"));
}

#[test]
fn invariant_of_the_trefoil() {
    let o = braidex(&["invariant", "--n", "2", "--degree", "2", "--", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "closure_conway"), "1 + z^2 + O(z^3)");
    assert_eq!(field(&out, "closure_alexander"), "t^2 - t + 1");
}

#[test]
fn parse_errors_exit_2() {
    let o = braidex(&["info", "--n", "3", "--", "1", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 1"));
    let o = braidex(&["info", "--n", "3", "--", "1", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = braidex(&["experiment", "dn", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = braidex(&["experiment", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dn_for_five_strands() {
    let o = braidex(&["experiment", "dn", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("check\tsecond difference at m=0\t-40\t-40\tPASS"));
    assert!(out.ends_with("result\tPASS\n"));
}

#[test]
fn lemma64_smallest_case() {
    let o = braidex(&["experiment", "lemma64", "--n1", "2", "--n2", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"name\": \"sum of quadratic coefficients\""));
    assert!(out.contains("\"pass\": true"));
}

#[test]
fn corpus_passes() {
    let o = braidex(&["experiment", "table8", "--corpus", "data/table8.tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("check\t")).count(), 96);
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS (96/96 checks)"));
}

#[test]
fn failing_corpus_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tsv");
    std::fs::write(&path, "knot_name\tword\nx\t1 3 1 3\n").unwrap();
    let o = braidex(&["experiment", "table8", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("result\tFAIL\n"));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let args = ["experiment", "eq54", "--n", "5", "--threads", "2", "--out", out];
    let first = braidex(&args);
    assert_eq!(first.status.code(), Some(0));
    let tsv = std::fs::read(dir.path().join("eq54-5.tsv")).unwrap();
    let json = std::fs::read_to_string(dir.path().join("eq54-5.json")).unwrap();
    assert!(json.contains("\"schema\": \"braidex.report/1\""));
    let second = braidex(&["experiment", "eq54", "--n", "5", "--no-cache"]);
    assert_eq!(second.stdout, tsv);
    assert_eq!(first.stdout, tsv);
}
