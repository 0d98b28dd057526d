use std::process::{Command, Output};

fn monodromy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodromy"))
        .args(args)
        .output()
        .expect("failed to run monodromy")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_reduces_before_reporting() {
    let a = monodromy(&["analyze", "2", "2", "2"]);
    let b = monodromy(&["analyze", "1", "1", "1"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("order_G:              9"));
    assert!(stdout(&a).contains("genus:                1"));
}

#[test]
fn analyze_rejects_invalid_triple() {
    let o = monodromy(&["analyze", "0", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid triple"));
    assert_eq!(
        monodromy(&["analyze", "-1", "1", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(monodromy(&["analyze", "1", "1"]).status.code(), Some(2));
}

#[test]
fn verify_prints_report_json() {
    let o = monodromy(&["verify", "2", "3", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order_G"], 300);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["structure_string"], "(C10 x C10) : C3");

    let o = monodromy(&["verify", "1", "2", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order_G"], 21);
}

#[test]
fn verify_respects_limit() {
    assert_eq!(
        monodromy(&["verify", "2", "3", "5", "--limit", "10"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn survey_formats() {
    let o = monodromy(&["survey", "--max-n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("1,1,1,3,3,9,"));
    assert!(!text.contains('\r'));

    let o = monodromy(&["survey", "--max-n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 5);

    let o = monodromy(&["survey", "--max-n", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.iter().all(|r| r["verified"] == true));
}

#[test]
fn survey_rejects_bad_flags() {
    assert_eq!(
        monodromy(&["survey", "--max-n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        monodromy(&["survey", "--max-n", "5", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(monodromy(&["survey"]).status.code(), Some(2));
}

#[test]
fn export_dot_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.dot");
    let o = monodromy(&["export-dot", "2", "3", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("20 nodes, 30 edges"));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 30);
}

#[test]
fn export_dot_default_path() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_monodromy"))
        .args(["export-dot", "2", "2", "2"])
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 nodes, 9 edges"));
    assert!(dir.path().join("dessin_1_1_1.dot").exists());
}

#[test]
fn export_dot_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("d.dot");
    let o = monodromy(&["export-dot", "1", "1", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}
