use std::fs;
use std::process::{Command, Output};

fn tiltcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltcat"))
        .args(args)
        .env_remove("TILTCAT_MULT_BOUND")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const A1_TOML: &str = r#"
name = "A1"
field = "Q"
vertices = ["a", "b"]
arrows = [
  { label = "alpha", source = "a", target = "b" },
  { label = "beta", source = "b", target = "a" },
]
relations = [["alpha", "beta", "alpha", "beta"], ["beta", "alpha", "beta", "alpha"]]

[expect]
dim = 8
indecomposables = 8
selfinjective = true
"#;

#[test]
fn passing_runs_exit_zero() {
    assert_eq!(code(&tiltcat(&["algebra", "validate", "builtin:A1"])), 0);
    assert_eq!(code(&tiltcat(&["tilting", "enumerate", "builtin:A3", "--model", "cluster"])), 0);
    assert_eq!(code(&tiltcat(&["quotient", "builtin:A1", "verify", "--objects", "a,a/b/a"])), 0);
}

#[test]
fn algebra_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.toml");
    fs::write(&path, A1_TOML).unwrap();
    let out = tiltcat(&["algebra", "validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn failed_checks_exit_one() {
    let out = tiltcat(&["quotient", "builtin:A2", "verify", "--objects", "a"]);
    assert_eq!(code(&out), 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.toml");
    fs::write(&path, A1_TOML.replace("dim = 8", "dim = 9")).unwrap();
    assert_eq!(code(&tiltcat(&["algebra", "validate", path.to_str().unwrap()])), 1);
}

#[test]
fn exhausted_bound_exits_two() {
    let args = ["quotient", "builtin:A2", "verify", "--objects", "a", "--override"];
    assert_eq!(code(&tiltcat(&args)), 0);
    let mut bounded = vec!["--mult-bound", "0"];
    bounded.extend(args);
    assert_eq!(code(&tiltcat(&bounded)), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_tiltcat"))
        .args(args)
        .env("TILTCAT_MULT_BOUND", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn bad_input_exits_three() {
    assert_eq!(code(&tiltcat(&["algebra", "validate", "/nonexistent/alg.toml"])), 3);
    assert_eq!(code(&tiltcat(&["stable", "builtin:A3"])), 3);
    assert_eq!(code(&tiltcat(&["no-such-command"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.toml");
    fs::write(&path, format!("colour = \"red\"\n{A1_TOML}")).unwrap();
    assert_eq!(code(&tiltcat(&["algebra", "validate", path.to_str().unwrap()])), 3);
    let path = dir.path().join("field.toml");
    fs::write(&path, A1_TOML.replace("field = \"Q\"", "field = \"F4\"")).unwrap();
    assert_eq!(code(&tiltcat(&["algebra", "validate", path.to_str().unwrap()])), 3);
}

#[test]
fn dot_output_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.dot");
    let out = tiltcat(&["ar-quiver", "builtin:A1", "--dot", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(path).unwrap(), include_str!("golden/a1_ar.dot"));
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    let path = dir.path().join("report.json");
    for _ in 0..2 {
        let out = tiltcat(&[
            "--report",
            path.to_str().unwrap(),
            "quotient",
            "builtin:A3",
            "gorenstein",
            "--model",
            "cluster",
            "--objects",
            "a/b/c[0],b/c[0],c[0]",
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        reports.push(fs::read_to_string(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let v: serde_json::Value = serde_json::from_str(&reports[0]).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn run_all_passes() {
    let out = tiltcat(&["examples", "run-all"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("PASS")), "{stdout}");
}
