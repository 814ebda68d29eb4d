use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kneser-sym"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn gen_matches_golden_files() {
    assert_eq!(stdout(&run(&["gen", "Q3", "--format", "graph6"])), golden("q3.g6"));
    assert_eq!(stdout(&run(&["gen", "H(5,2)", "--format", "dot"])), golden("h52.dot"));
    assert_eq!(stdout(&run(&["gen", "K(5,2)", "--format", "adj"])), golden("k52.adj"));
}

#[test]
fn gen_rejects_null_and_malformed_specs() {
    let out = run(&["gen", "H(4,2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("null graph"));
    assert_eq!(run(&["gen", "X(1,2)"]).status.code(), Some(2));
    assert_eq!(run(&["gen"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn aut_reports_exact_orders() {
    let out = run(&["aut", "H(5,2)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "order 240"), "{text}");
    assert!(text.contains(" swapping") && text.contains(" preserving"));
    assert!(stdout(&run(&["aut", "K(5,2)"])).lines().any(|l| l == "order 120"));
    let petersen: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", "petersen.g6"].iter().collect();
    let text = stdout(&run(&["aut", "--file", petersen.to_str().unwrap()]));
    assert!(text.lines().any(|l| l == "order 120"), "{text}");
}

#[test]
fn aut_budget_and_trace() {
    let out = run(&["aut", "H(5,2)", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["aut", "Q3", "--trace"]);
    assert!(out.status.success());
    let trace = String::from_utf8(out.stderr.clone()).unwrap();
    let nodes: u64 = stdout(&out).lines().find_map(|l| l.strip_prefix("nodes ")).unwrap().parse().unwrap();
    assert_eq!(trace.lines().count() as u64, nodes);
    assert!(trace.starts_with("first 1 depth 0 cells 1 shape 8\n"));
}

#[test]
fn aut_json_is_parseable() {
    let out = run(&["aut", "J(4,2)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["order"], "48");
    assert_eq!(v["vertices"], 6);
}

#[test]
fn props_summaries() {
    let h = stdout(&run(&["props", "H(5,2)"]));
    for line in ["vertices 20", "edges 30", "regular 3", "parts 10+10", "connectivity 3"] {
        assert!(h.lines().any(|l| l == line), "{line} missing from {h}");
    }
    let k = stdout(&run(&["props", "K(5,2)"]));
    assert!(k.contains("vertices 10\n") && k.contains("regular 3\n") && k.contains("diameter 2\n"));
    let j = stdout(&run(&["props", "J(4,2)", "--json"]));
    let v: serde_json::Value = serde_json::from_str(j.trim()).unwrap();
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["regular_degree"], 4);
}

#[test]
fn verify_filters_and_exit_codes() {
    let out = run(&["verify", "Thm3_6", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let reports: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].starts_with("PASS Thm3_6 H(5,2) "));

    let out = run(&["verify", "Cor1_3", "--max-n", "7"]);
    let text = stdout(&out);
    for inst in ["H(5,2)", "H(6,2)", "H(7,2)", "H(7,3)"] {
        assert!(text.contains(&format!("PASS Cor1_3 {inst} ")), "{inst}");
    }

    let out = run(&["verify", "Thm9_9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("JohnsonAut"));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "Thm3_6", "--max-n", "6", "--budget", "2"]).status.code(), Some(3));
}

#[test]
fn verify_json_lines() {
    let out = run(&["verify", "EKR", "--max-n", "6", "--json"]);
    assert!(out.status.success());
    let records: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    for r in &records {
        assert_eq!(r["claim_id"], "EKR");
        assert_eq!(r["passed"], true);
        assert_eq!(r["expected"], r["observed"]);
        assert!(r.get("elapsed_ms").is_none());
    }
    let timed = run(&["verify", "EKR", "--max-n", "5", "--json", "--timings"]);
    assert!(stdout(&timed).contains("\"elapsed_ms\""));
}

#[test]
fn export_writes_files_that_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("h52.g6");
    let out = run(&["export", "H(5,2)", "--format", "graph6", "--out", g6.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&run(&["aut", "--file", g6.to_str().unwrap()]));
    assert!(text.lines().any(|l| l == "order 240"));

    let adj = dir.path().join("petersen.adj");
    let petersen: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", "petersen.g6"].iter().collect();
    let out =
        run(&["export", "--file", petersen.to_str().unwrap(), "--format", "adj", "--out", adj.to_str().unwrap()]);
    assert!(out.status.success());
    let props = stdout(&run(&["props", "--file", adj.to_str().unwrap()]));
    assert!(props.contains("vertices 10\n") && props.contains("regular 3\n"));
    assert_eq!(run(&["props", "--file", "/nonexistent/graph.g6"]).status.code(), Some(2));
}
