use std::process::{Command, Output};

use serde_json::Value;

fn tlb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = tlb(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn enumerate_two_as_json() {
    let v = json(&["enumerate", "2", "--format", "json"]);
    let diagrams = v["result"]["diagrams"].as_array().unwrap();
    assert_eq!(diagrams.len(), 6);
    assert_eq!(diagrams[0]["text"], "n=2;(1,2,w=0),(3,4,w=0)");
    assert_eq!(diagrams[5]["text"], "n=2;(1,4,w=1),(2,3,w=1)");
    assert_eq!(
        diagrams[1]["chords"][1],
        serde_json::json!({ "i": 3, "j": 4, "w": 1 })
    );
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["params"]["n"], 2);
}

#[test]
fn symbolic_verification_prints_the_product() {
    let o = tlb(&["det-verify", "1", "--mode", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("product:     -1*a^2*d^0 + 1*a^0*d^2"), "{out}");
    assert!(out.ends_with("n=1: PASS\n"));
}

#[test]
fn modular_report_embeds_prime_and_seed() {
    let v = json(&[
        "det-verify",
        "3",
        "--mode",
        "modular",
        "--trials",
        "4",
        "--seed",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(v["params"]["seed"], 11);
    assert_eq!(v["params"]["mode"], "modular");
    assert_eq!(v["result"]["prime"], 2305843009213693951u64);
    assert_eq!(v["result"]["trials"].as_array().unwrap().len(), 4);
    assert_eq!(v["pass"], true);
}

#[test]
fn telescoping_fifty_lines() {
    let o = tlb(&["telescoping", "50"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(": PASS")).count(), 50);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["nullity-gram", "3", "2", "--seed", "9", "--format", "json"][..],
        &[
            "det-verify",
            "4",
            "--mode",
            "modular",
            "--trials",
            "3",
            "--seed",
            "5",
            "--format",
            "csv",
        ],
        &["gram", "2", "--format", "csv"],
    ] {
        assert_eq!(tlb(args).stdout, tlb(args).stdout, "{args:?}");
    }
}

#[test]
fn gram_csv_is_quoted_and_square() {
    let o = tlb(&["gram", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with(",\"n=2;(1,2,w=0),(3,4,w=0)\""));
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|row| row.len() == 7));
    for i in 1..7 {
        assert_eq!(&rows[i][i], "1*a^0*d^2");
        for j in 1..7 {
            assert_eq!(rows[i][j], rows[j][i]);
        }
    }
}

#[test]
fn counts_csv_columns() {
    let o = tlb(&["counts", "--max-sum", "5", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,count_tilde,formula,match"));
    assert!(lines.all(|l| l.ends_with(",true")));
}

#[test]
fn skein_nullity_with_given_sample() {
    let v = json(&[
        "nullity-skein",
        "1",
        "1",
        "--sample",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(v["result"]["nullity"], 1);
    assert_eq!(v["result"]["bound"], "1");
    let v = json(&[
        "nullity-skein",
        "2",
        "1",
        "--sample",
        "3/2",
        "--format",
        "json",
    ]);
    assert_eq!(v["result"]["nullity"], 4);
}

#[test]
fn gram_nullity_with_given_sample() {
    let v = json(&[
        "nullity-gram",
        "2",
        "1",
        "--sample",
        "7/3",
        "--format",
        "json",
    ]);
    assert_eq!(v["result"]["nullity"], 4);
    assert_eq!(v["result"]["samples"][0]["sample"], "7/3");
}

#[test]
fn jones_wenzl_two() {
    let o = tlb(&["jones-wenzl", "2"]);
    let out = stdout(&o);
    assert_eq!(out, "()() (1*A^2)/(1*A^4 + 1*A^0)\n(()) 1*A^0\n");
}

#[test]
fn bijection_and_sign_conjugation_pass() {
    assert!(tlb(&["bijection", "4"]).status.success());
    assert!(tlb(&["lemma2", "3"]).status.success());
}

#[test]
fn usage_errors_name_flag_and_range() {
    let o = tlb(&["gram", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("<N>") && err.contains("1..=5"), "{err}");

    let o = tlb(&["det-verify", "2", "--mode", "modular", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("--trials"));

    assert_eq!(
        tlb(&["lemma2", "2", "--format", "csv"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tlb(&["enumerate", "2", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tlb(&["nullity-skein", "1", "1", "--sample", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tlb(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn writes_to_out_path() {
    let path = std::env::temp_dir().join(format!("tlb-out-{}.json", std::process::id()));
    let o = tlb(&[
        "enumerate",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["count"], 2);
    std::fs::remove_file(path).unwrap();
}
