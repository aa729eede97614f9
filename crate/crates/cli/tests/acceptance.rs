//! CLI acceptance: determinism of the corpus reports (criterion 11), the
//! exit-code contract, and the command-line surfaces.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contralg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("contralg-test-{}-{}", std::process::id(), name));
    p
}

fn write_job(name: &str, contents: &str) -> PathBuf {
    let p = tmp_path(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn acceptance_11_run_all_reports_are_byte_identical() {
    let json1 = tmp_path("runall-1.json");
    let json2 = tmp_path("runall-2.json");
    let out1 = run(&["examples", "run-all", "--json", json1.to_str().unwrap()]);
    assert!(
        out1.status.success(),
        "first run failed: {}",
        String::from_utf8_lossy(&out1.stderr)
    );
    let out2 = run(&["examples", "run-all", "--json", json2.to_str().unwrap()]);
    assert!(out2.status.success());
    let b1 = std::fs::read(&json1).unwrap();
    let b2 = std::fs::read(&json2).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(
        b1, b2,
        "criterion 11: consecutive run-all JSON reports must be byte-identical"
    );
    // stdout is deterministic as well
    assert_eq!(out1.stdout, out2.stdout);
    println!("criterion 11: PASS");
}

#[test]
fn run_all_passes_and_is_parallel_safe() {
    let json1 = tmp_path("runall-seq.json");
    let json4 = tmp_path("runall-par.json");
    let seq = run(&["examples", "run-all", "--json", json1.to_str().unwrap()]);
    assert!(seq.status.success());
    let par = run(&[
        "examples",
        "run-all",
        "--jobs",
        "4",
        "--json",
        json4.to_str().unwrap(),
    ]);
    assert!(par.status.success());
    assert_eq!(
        std::fs::read(&json1).unwrap(),
        std::fs::read(&json4).unwrap()
    );
    let text = String::from_utf8(seq.stdout).unwrap();
    assert!(text.contains("total: 10/10 jobs passed"));
}

#[test]
fn examples_list_has_ten_entries() {
    let out = run(&["examples", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names.len(), 10);
    assert!(names.contains(&"sl2"));
    assert!(names.contains(&"split_points"));
}

#[test]
fn chart_gluing_reports_transition() {
    let out = run(&["examples", "run", "sign_line", "--chart-gluing"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("transition: w- -> 1/(t*g-)"),
        "missing transition in:\n{text}"
    );
}

#[test]
fn broken_involution_exits_one_and_names_theta_square() {
    let job = write_job(
        "broken.job",
        r#"{
            "field": {"kind": "rationals"},
            "vars": ["w"],
            "involution": {"w": "w + 1"}
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not an involution"), "stderr: {err}");
    assert!(
        err.contains("theta^2"),
        "stderr should name the theta^2 failure: {err}"
    );
}

#[test]
fn resource_cap_exits_two() {
    let job = write_job(
        "capped.job",
        r#"{
            "field": {"kind": "rationals"},
            "vars": ["x", "y", "z"],
            "relations": ["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"],
            "involution": {"x": "x", "y": "y", "z": "z"}
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap(), "--max-pairs", "1"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("resource limit"), "stderr: {err}");
}

#[test]
fn contract_prints_tagged_generators() {
    let out = run(&["examples", "run", "split_points"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("gen w- (minus_over)"));
    assert!(text.contains("rel t*w-^2 - 1"));
    assert!(text.contains("fiber at t=0: zero ring"));
}

#[test]
fn raw_4lambda_presentation_keeps_all_blocks() {
    let job = write_job(
        "raw.job",
        r#"{
            "name": "raw_sign_line",
            "field": {"kind": "rationals"},
            "vars": ["w"],
            "involution": {"w": "-w"}
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap(), "--raw-4lambda"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // four generators per source generator, with the forced relations
    // x11 (plus, zero witness), x12 = t*x21 among them
    for g in [
        "w_11 (plus)",
        "w_22 (plus)",
        "w_12 (minus_times)",
        "w_21 (minus_over)",
    ] {
        assert!(text.contains(g), "missing {g} in:\n{text}");
    }
    assert!(
        text.contains("rel w_11"),
        "x11 must vanish for a pure minus generator:\n{text}"
    );
    assert!(
        text.contains("rel t*w_21 - w_12") || text.contains("rel w_12 - t*w_21"),
        "missing the forced x12 = t x21 relation:\n{text}"
    );
}

#[test]
fn verify_with_explicit_props() {
    let job = write_job(
        "verify.job",
        r#"{
            "name": "inline",
            "field": {"kind": "rationals"},
            "vars": ["w"],
            "relations": ["w^2 - 1"],
            "involution": {"w": "-w"}
        }"#,
    );
    let out = run(&["verify", job.to_str().unwrap(), "--props", "flat,fiber0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verify flat: PASS"));
    assert!(text.contains("verify fiber0: PASS"));
}

#[test]
fn prime_field_jobs_work() {
    let job = write_job(
        "f7.job",
        r#"{
            "name": "f7_split",
            "field": {"kind": "prime_field", "p": 7},
            "vars": ["w"],
            "relations": ["w^2 - 1"],
            "involution": {"w": "-w"},
            "verify": ["flat", "fiber0", "unit_fiber"]
        }"#,
    );
    let out = run(&["verify", job.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("GF(7)"));
    assert!(text.contains("result: OK"));
}

#[test]
fn characteristic_two_is_rejected() {
    let job = write_job(
        "f2.job",
        r#"{
            "field": {"kind": "prime_field", "p": 2},
            "vars": ["w"]
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("characteristic 2"), "stderr: {err}");
}

#[test]
fn reserved_variable_names_are_rejected() {
    let job = write_job(
        "reserved.job",
        r#"{
            "field": {"kind": "rationals"},
            "vars": ["t"]
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("reserved"));
}

#[test]
fn lex_order_flag_changes_presentation_order() {
    let job = write_job(
        "lexjob.job",
        r#"{
            "name": "lexjob",
            "field": {"kind": "rationals"},
            "vars": ["w"],
            "relations": ["w^2 - 1"],
            "involution": {"w": "-w"}
        }"#,
    );
    let grevlex = run(&["contract", job.to_str().unwrap()]);
    let lex = run(&["contract", job.to_str().unwrap(), "--order", "lex"]);
    assert!(grevlex.status.success() && lex.status.success());
    // both orders present the same principal ideal here
    let g = String::from_utf8(grevlex.stdout).unwrap();
    let l = String::from_utf8(lex.stdout).unwrap();
    assert!(g.contains("rel t*w-^2 - 1"));
    assert!(l.contains("rel t*w-^2 - 1"));
}

#[test]
fn json_report_mirrors_the_text_verdicts() {
    let json = tmp_path("sl2.json");
    let out = run(&["examples", "run", "sl2", "--json", json.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(parsed["job"], "sl2");
    assert_eq!(parsed["ok"], true);
    let results = parsed["results"].as_array().unwrap();
    let verifies: Vec<&serde_json::Value> =
        results.iter().filter(|r| r["op"] == "verify").collect();
    assert_eq!(verifies.len(), 10);
    assert!(verifies.iter().all(|v| v["verdict"] == "pass"));
}

#[test]
fn run_all_matches_committed_golden_report() {
    let json = tmp_path("golden-check.json");
    let out = run(&["examples", "run-all", "--json", json.to_str().unwrap()]);
    assert!(out.status.success());
    let produced = std::fs::read_to_string(&json).unwrap();
    let golden = include_str!("golden/run_all.json");
    assert_eq!(
        produced, golden,
        "run-all JSON drifted from tests/golden/run_all.json"
    );
}

#[test]
fn env_var_caps_are_honored() {
    let job = write_job(
        "envcap.job",
        r#"{
            "field": {"kind": "rationals"},
            "vars": ["x", "y", "z"],
            "relations": ["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"],
            "involution": {"x": "x", "y": "y", "z": "z"}
        }"#,
    );
    let out = bin()
        .args(["contract", job.to_str().unwrap()])
        .env("CONTRALG_MAX_PAIRS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // an explicit flag overrides the environment
    let out = bin()
        .args(["contract", job.to_str().unwrap(), "--max-pairs", "100000"])
        .env("CONTRALG_MAX_PAIRS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn raw_4lambda_sl2_shows_closure_structure() {
    let job = write_job(
        "rawsl2.job",
        r#"{
            "name": "rawsl2",
            "field": {"kind": "rationals"},
            "vars": ["a", "b", "c", "d"],
            "relations": ["a*d - b*c - 1"],
            "involution": {"a": "d", "b": "-c", "c": "-b", "d": "a"}
        }"#,
    );
    let out = run(&["contract", job.to_str().unwrap(), "--raw-4lambda"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("contract: 16 generator(s)"));
    // diagonal blocks coincide and the x12 = t*x21 relation is forced
    assert!(text.contains("rel a_11 - d_22") || text.contains("rel a_11 - a_22"));
    assert!(
        text.contains("rel t*d_21 - d_12"),
        "missing forced x12 = t x21:\n{text}"
    );
}
