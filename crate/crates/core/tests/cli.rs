use std::process::{Command, Output};

use polyflat::certificate::{Certificate, Verdict};

fn polyflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyflat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn certs(out: &Output) -> Vec<Certificate> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| Certificate::from_json(l).expect("valid certificate"))
        .collect()
}

#[test]
fn classify_json_and_exit() {
    let out = polyflat(&["--json", "classify", "--max-n", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let cs = certs(&out);
    assert_eq!(cs.len(), 29);
    assert_eq!(
        cs.last().unwrap().payload["flat_set"],
        serde_json::json!([3, 4, 6, 8, 12, 24])
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("classifying"));
}

#[test]
fn classify_usage_error() {
    let out = polyflat(&["--json", "classify", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(certs(&out)[0].reason.as_deref(), Some("invalid_argument"));
    // clap-level usage errors also exit with 2
    assert_eq!(polyflat(&["classify"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_workers() {
    let a = polyflat(&[
        "--json",
        "--workers",
        "1",
        "refute",
        "--n",
        "5",
        "--terms",
        "2",
        "--bound",
        "5",
    ]);
    let b = polyflat(&[
        "--json",
        "--workers",
        "4",
        "refute",
        "--n",
        "5",
        "--terms",
        "2",
        "--bound",
        "5",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
    let c = &certs(&a)[0];
    assert_eq!(c.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(c.payload["structural_refutation"], serde_json::json!(true));
}

#[test]
fn verify_claims() {
    let out = polyflat(&["--json", "verify", "lemma", "5", "25", "10", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(certs(&out)[0].payload["galois_class"], "C4");

    let out = polyflat(&["--json", "verify", "area-identity", "5", "-3/2", "7"]);
    assert_eq!(out.status.code(), Some(0));

    let out = polyflat(&["--json", "verify", "lemma", "5", "25", "10", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(certs(&out)[0].reason.as_deref(), Some("lemma_hypothesis"));

    assert_eq!(polyflat(&["verify", "unknown-claim"]).status.code(), Some(2));
}

#[test]
fn search_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hex.csv");
    let out = polyflat(&[
        "--json",
        "search",
        "--n",
        "6",
        "--bound",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("parameters,distances,n"));
    assert!(lines.any(|l| l == "0 0,1 1 1 1 1 1,6"));

    let out = polyflat(&["--json", "search", "--n", "4", "--bound", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(certs(&out)[0].payload["hit_count"], 0);

    let out = polyflat(&["--json", "search", "--n", "5", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(certs(&out)[0].reason.as_deref(), Some("unsupported_polygon"));
}

#[test]
fn human_output() {
    let out = polyflat(&["refute", "--n", "6", "--terms", "1", "--bound", "27"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("sqrt_sum.refute: witness_found"));
}
