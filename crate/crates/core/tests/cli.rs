use std::path::Path;
use std::process::{Command, Output};

fn polyjoin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyjoin")).args(args).output().expect("spawn polyjoin")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const SMALL: &str = r#"
[[cases]]
theorem = "k2-join"
g = "P5"
d = 1

[[cases]]
theorem = "pn-lex"
n = 5
h = "K2"

[[cases]]
theorem = "star"
n = 3
r = 2
d = "inf"
"#;

#[test]
fn verify_golden_case() {
    let o = polyjoin(&["verify", "k2-join", "--g", "P5", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["computed"]["1"], 24);
}

#[test]
fn betti_of_graph_expression() {
    let o = polyjoin(&["betti", "lex(P5,K2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("b1=8 b2=1"), "{}", stdout(&o));
}

#[test]
fn build_then_betti_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.txt");
    let o = polyjoin(&["build", "C5", "--d", "2", "--out", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = polyjoin(&["betti", file.to_str().unwrap()]);
    // F_2(C5): every proper subset, i.e. the boundary of the 4-simplex
    assert!(stdout(&o).contains("b3=1"), "{}", stdout(&o));
}

#[test]
fn sweep_passes_and_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "sweep.toml", SMALL);
    let out = dir.path().join("out");
    let o = polyjoin(&["sweep", "--config", &cfg, "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("passed 3 failed 0 skipped 0"));
    assert!(out.join("report.json").is_file() && out.join("report.csv").is_file());

    let csv = polyjoin(&["report", "--input", out.join("report.json").to_str().unwrap(), "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = stdout(&csv);
    assert!(text.starts_with("theorem,case,target,verdict"));
    assert_eq!(text.lines().count(), 4);

    let json = polyjoin(&["report", "--input", out.join("report.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn perturbed_prediction_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "sweep.toml", &format!("{SMALL}perturb = 2\n"));
    let o = polyjoin(&["sweep", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failure: case 2"), "{}", stdout(&o));
}

#[test]
fn empty_sweep_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "empty.json", r#"{"cases": []}"#);
    let o = polyjoin(&["sweep", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed 0 failed 0 skipped 0"));
}

#[test]
fn configuration_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.toml");
    assert_eq!(polyjoin(&["sweep", "--config", missing.to_str().unwrap()]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.toml", "[[cases]]\ntheorem = \"star\"\nn = 0\nr = 2\nd = 1\n");
    assert_eq!(polyjoin(&["sweep", "--config", &bad]).status.code(), Some(2));
    let unknown = write(dir.path(), "unknown.toml", "[[cases]]\ntheorem = \"nonsense\"\n");
    assert_eq!(polyjoin(&["sweep", "--config", &unknown]).status.code(), Some(2));
    assert_eq!(polyjoin(&["verify", "k2-join", "--g", "P5"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_is_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "tight.toml", &format!("budget = 10\n{SMALL}"));
    let o = polyjoin(&["sweep", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped 3"), "{}", stdout(&o));
}

#[test]
fn sweep_is_deterministic_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "sweep.toml", SMALL);
    let run = |name: &str| {
        let out = dir.path().join(name);
        polyjoin(&["sweep", "--config", &cfg, "--out-dir", out.to_str().unwrap()]);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    assert_eq!(run("a"), run("b"));
}
