use std::process::{Command, Output};

use lagtrace::json::Document;

fn lagtrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagtrace")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn det_of_phi() {
    let o = lagtrace(&["det", "--builtin", "phi"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "b2'^-1\nadditive: -b2'\n");
}

#[test]
fn det_of_exported_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.aut");
    let o = lagtrace(&["export", "--builtin", "phi"]);
    std::fs::write(&path, o.stdout).unwrap();
    let o = lagtrace(&["det", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("b2'^-1\n"));
}

#[test]
fn degree_of_identity_exceeds_bound() {
    let o = lagtrace(&["degree", "--builtin", "identity", "--max", "3"]);
    assert_eq!(stdout(&o), "exceeds 3\n");
}

#[test]
fn thm_b_report() {
    let o = lagtrace(&["--format", "json", "verify", "thm-b", "--genus", "2", "--count", "3", "--seed", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    let first = &v["results"][0];
    assert_eq!(first["inputs"]["label"], "phi");
    assert_eq!(first["lhs"], "-b2'");
    assert_eq!(first["rhs"], "-b2'");
    assert_eq!(first["inputs"]["seed"], 4);
}

#[test]
fn json_outputs_round_trip() {
    let runs: &[&[&str]] = &[
        &["tau", "--builtin", "phi", "--k", "1"],
        &["tau", "--builtin", "phi", "--genus", "3", "--k", "1"],
        &["trace", "--builtin", "phi", "--k", "1", "--kind", "lagrangian"],
        &["trace", "--builtin", "phi", "--k", "1", "--kind", "morita"],
        &["magnus", "--builtin", "phi", "--handlebody"],
        &["magnus", "--builtin", "phi"],
        &["fox", "--builtin", "slide_1_2", "--gen", "b2"],
        &["det", "--builtin", "twist_b1", "--surface"],
        &["degree", "--builtin", "phi"],
        &["basis", "--space", "G", "--genus", "2", "--k", "2"],
        &["verify", "calibration"],
    ];
    for args in runs {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let o = lagtrace(&full);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        let doc = Document::parse_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(format!("{}\n", doc.to_pretty()), text, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| lagtrace(args).status.code().unwrap();
    assert_eq!(code(&["det", "--builtin", "nope"]), 2);
    assert_eq!(code(&["det"]), 2);
    assert_eq!(code(&["det", "--builtin", "phi", "--genus", "1"]), 2);
    assert_eq!(code(&["det", "--builtin", "twist_b1"]), 4);
    assert_eq!(code(&["tau", "--builtin", "phi", "--k", "2"]), 4);
    assert_eq!(code(&["trace", "--builtin", "twist_b1", "--k", "1", "--kind", "lagrangian"]), 4);
    assert_eq!(code(&["det", "--file", "/nonexistent/file.aut"]), 6);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.aut");
    std::fs::write(&bad, "genus 2\na1 -> a1 c7\n\na1 -> a1\n").unwrap();
    let o = lagtrace(&["det", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 10"));
}
