use std::path::PathBuf;
use std::process::{Command, Output};

fn graph_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("raag-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn raag(args: &[&str]) -> Output {
    let cache = std::env::temp_dir().join(format!("raag-cli-cache-{}", std::process::id()));
    Command::new(env!("CARGO_BIN_EXE_raag"))
        .args(args)
        .env("RAAG_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const P3: &str = "# path on three vertices\na b\nb c\n";

#[test]
fn nf_echo() {
    let p3 = graph_file("p3_nf.txt", P3);
    let o = raag(&["nf", p3.to_str().unwrap(), "a b a^-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "b\n");

    let o = raag(&["nf", p3.to_str().unwrap(), "c b a", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["normal_form"], "b c a");
    assert_eq!(doc["schema_version"], 1);

    let o = raag(&["nf", p3.to_str().unwrap(), "a x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_p3() {
    let p3 = graph_file("p3_analyze.txt", P3);
    let o = raag(&["analyze", p3.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("E0{b} level 1"), "{text}");
    assert!(
        text.contains("E1{a,c} level 2 vertices {a,b,c} with-center Ab={b}"),
        "{text}"
    );

    let o = raag(&["analyze", p3.to_str().unwrap(), "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["flags"]["hyperedges"][1]["ab"][0], "b");

    let o = raag(&["analyze", p3.to_str().unwrap(), "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph flags"));
}

#[test]
fn analyze_errors_and_warnings() {
    let empty = graph_file("empty.txt", "");
    let o = raag(&["analyze", empty.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("empty"));

    let bad = graph_file("bad.txt", "a b\nb b\n");
    let o = raag(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let split = graph_file("split.txt", "a b\nc d\n");
    let o = raag(&["analyze", split.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning: graph has 2 components"));

    let o = raag(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn factor_p3() {
    let p3 = graph_file("p3_factor.txt", P3);
    let o = raag(&["factor", p3.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(
        text.contains("12 verified, 1 symmetry residue(s), 0 failure(s) (radius 4, depth 3)"),
        "{text}"
    );
    assert!(
        text.contains("ok       transvection(a,b) = E1:center-transvect(a,b)"),
        "{text}"
    );

    let o = raag(&[
        "factor",
        p3.to_str().unwrap(),
        "--format",
        "json",
        "--radius",
        "2",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["report"]["failures"], 0);
    assert_eq!(doc["report"]["config"]["radius"], 2);

    let o = raag(&["factor", p3.to_str().unwrap(), "--depth", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify15_and_decompose() {
    let p4 = graph_file("p4.txt", "a b\nb c\nc d\n");
    let o = raag(&["verify15", p4.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(", 0 failure(s)"));

    let o = raag(&["decompose", p4.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("killed: {b}"), "{text}");
    let o = raag(&["decompose", p4.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(stdout(&o).matches("digraph").count(), 4);
}

#[test]
fn gens_and_output_file() {
    let p3 = graph_file("p3_gens.txt", P3);
    let out = graph_file("gens.json", "");
    let o = raag(&[
        "gens",
        p3.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(doc["laurence"]
        .as_array()
        .unwrap()
        .iter()
        .any(|g| g["id"] == "transvection(a,b)"));

    let o = raag(&["gens", p3.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corpus_up_to_five() {
    let o = raag(&["corpus", "--max-n", "5", "--jobs", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("graphs: 29 (n = 3..=5)"), "{text}");
    assert!(text.contains("failures: 0"));
}
