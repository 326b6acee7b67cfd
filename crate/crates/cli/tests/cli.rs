use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn findom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_findom"))
        .args(args)
        .env_remove("FINDOM_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON report")
}

#[test]
fn analyze_kupisch_file() {
    let o = findom(&["analyze", &data("kupisch-2-2-1.json"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let r = &v["classification"]["report"];
    assert_eq!(r["domdim"]["value"], serde_json::json!({"finite": 2}));
    assert_eq!(r["findim"]["value"], serde_json::json!({"finite": 2}));
    let flags = &v["classification"]["verdict"];
    assert_eq!(flags["finitistic_auslander"]["value"], "true");
    assert_eq!(flags["higher_auslander"]["value"], "true");
}

#[test]
fn analyze_human_output_names_provenance() {
    let o = findom(&["analyze", &data("q8.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(bounded, cutoff 24)"), "{text}");
    assert!(text.contains("selfinjective: yes"));
}

#[test]
fn resolve_hopf_simple() {
    let o = findom(&[
        "resolve",
        &data("hopf.json"),
        "--module",
        "simple",
        "--direction",
        "proj",
        "--steps",
        "4",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let steps = json(&o)["steps"].as_array().unwrap().clone();
    assert_eq!(steps.len(), 5);
    assert_eq!(steps[0]["dim"], 1);
    assert_eq!(steps[4]["dim"], 9);
}

#[test]
fn resolve_reports_finite_dimension() {
    let o = findom(&[
        "resolve",
        &data("kupisch-2-2-1.json"),
        "--module",
        "s1",
        "--steps",
        "5",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dimension"], 2);
}

#[test]
fn ext_between_named_modules() {
    let o = findom(&[
        "ext",
        &data("kupisch-2-2-1.json"),
        "--from",
        "s1",
        "--to",
        "simple:2",
        "--max-degree",
        "2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ext"], serde_json::json!([1, 0]));
}

#[test]
fn mueller_on_generator_cogenerator() {
    let o = findom(&["mueller", &data("kupisch-2-2-1.json"), "--summands", "A,DA"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("finitistic Auslander: yes"));
    let bad = findom(&[
        "mueller",
        &data("kupisch-2-2-1.json"),
        "--summands",
        "simple:1",
    ]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn tilting_count_of_ngas_example() {
    let o = findom(&[
        "tilting",
        &data("kupisch-2-2-1.json"),
        "--kind",
        "tilting",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["modules"].as_array().unwrap().len(), 3);
}

#[test]
fn scan_has_no_counterexamples() {
    let args = [
        "scan-nakayama",
        "--n",
        "6",
        "--max-entry",
        "14",
        "--kind",
        "cyclic",
        "--predicate",
        "ngas-conjecture",
        "--json",
    ];
    let o = findom(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["counterexamples"], serde_json::json!([]));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let base = [
        "scan-nakayama",
        "--n",
        "5",
        "--max-entry",
        "8",
        "--predicate",
        "combined",
        "--json",
    ];
    let one = findom(&[&base[..], &["--workers", "1"]].concat());
    let four = findom(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let v = findom(&["verify", "findim-identity", "--json", "--workers", "3"]);
    let w = findom(&["verify", "findim-identity", "--json", "--workers", "1"]);
    assert_eq!(v.stdout, w.stdout);
}

#[test]
fn verify_suite() {
    let o = findom(&["verify", "hopf-omega4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS]"));
    assert_eq!(findom(&["verify", "no-such-suite"]).status.code(), Some(3));
}

#[test]
fn malformed_input_exits_3_with_position() {
    let dir = std::env::temp_dir().join(format!("findom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"kind": "kupisch", "char": 2, "series": [2, 4, 1]}"#,
    )
    .unwrap();
    let o = findom(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.series[2]"));
    std::fs::write(
        &bad,
        "{\"kind\": \"kupisch\",\n \"char\": 4, \"series\": [1]}",
    )
    .unwrap();
    let o = findom(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.char"));
    std::fs::write(&bad, "{\"kind\": \n").unwrap();
    let o = findom(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    std::fs::remove_dir_all(&dir).ok();
}
