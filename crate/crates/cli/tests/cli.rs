//! End-to-end tests of the `rrverify` binary: commands, formats, exit codes,
//! the golden series file, and worker-count independence of batch runs.

use std::collections::BTreeMap;
use std::process::{Command, Output};

fn rrverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrverify"))
        .args(args)
        .env_remove("RRVERIFY_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn count_prints_the_number() {
    let out = rrverify(&["count", "--a", "1", "--m", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn count_formats() {
    let out = rrverify(&["count", "--a", "1", "--m", "2", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], 4);

    let out = rrverify(&["count", "--a", "1", "--m", "2", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "a,m,n,count\n1,2,3,4\n");
}

#[test]
fn verify_reports_match_as_json() {
    let out = rrverify(&[
        "verify",
        "--id",
        "bivariate_12",
        "--order",
        "24",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "MATCH");
    assert_eq!(v["order"], 24);
    assert!(v["first_mismatch"].is_null());
    assert!(v["elapsed_ms"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_accepts_parameter_flags() {
    let out = rrverify(&[
        "verify",
        "--id",
        "corollary_14_a1",
        "--omega",
        "2",
        "--order",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = rrverify(&[
        "verify",
        "--id",
        "wellpoised",
        "--param",
        "alpha=2",
        "--param",
        "beta=1",
        "--order",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn list_shows_the_registry() {
    let out = rrverify(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ariki_mathas_enum"));
    assert!(text.contains("ariki_mathas_multisum"));

    let out = rrverify(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v.as_array().unwrap().len() >= 20);
}

#[test]
fn table_matches_the_small_family() {
    let out = rrverify(&["table", "--a", "1", "--m", "2", "--max-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,count\n0,1\n1,2\n2,2\n3,4\n");

    let out = rrverify(&[
        "table", "--a", "2", "--m", "2", "--max-n", "1", "--by-omega", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "n,count,omega\n0,1,0\n1,1,1\n");
}

#[test]
fn usage_errors_exit_2() {
    let out = rrverify(&["verify", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rrverify(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parameter_and_budget_errors_exit_3() {
    let out = rrverify(&["verify", "--id", "no_such_identity", "--order", "5"]);
    assert_eq!(out.status.code(), Some(3));

    let out = rrverify(&["verify", "--id", "corollary_14_a1", "--omega", "99", "--order", "5"]);
    assert_eq!(out.status.code(), Some(3));

    let out = rrverify(&[
        "verify",
        "--id",
        "ariki_mathas_enum",
        "--order",
        "24",
        "--budget",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = rrverify(&["table", "--a", "1", "--m", "2", "--max-n", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_rrverify"))
        .args(["count", "--a", "1", "--m", "2", "--n", "8"])
        .env("RRVERIFY_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_rrverify"))
        .args(["count", "--a", "1", "--m", "2", "--n", "8", "--budget", "10"])
        .env("RRVERIFY_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "--budget overrides the env var");
}

#[test]
fn golden_series_file() {
    let out = rrverify(&[
        "series", "--id", "product", "--a", "1", "--m", "2", "--order", "8", "--format", "json",
    ]);
    let got: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let golden: serde_json::Value =
        serde_json::from_str(include_str!("golden/product_a1_m2_order8.json")).unwrap();
    assert_eq!(got, golden);
}

#[test]
fn series_json_roundtrips_through_the_schema() {
    for (name, extra) in [
        ("enum_gf", vec!["--a", "1", "--m", "2"]),
        ("h_minus", vec!["--omega", "-2"]),
        ("f_stat", vec!["--n", "3"]),
    ] {
        let mut args = vec!["series", "--id", name, "--order", "10", "--format", "json"];
        args.extend(extra);
        let out = rrverify(&args);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        let series = rrverify::format::series_from_json(&v).unwrap();
        assert_eq!(rrverify::format::series_to_json(&series), v, "{name}");
    }
}

#[test]
fn all_at_low_order_exits_zero_and_is_worker_independent() {
    let single = rrverify(&["all", "--order", "6", "--format", "json"]);
    assert_eq!(single.status.code(), Some(0));
    let parallel = rrverify(&["all", "--order", "6", "--jobs", "4", "--format", "json"]);
    assert_eq!(parallel.status.code(), Some(0));

    let strip = |raw: &str| -> Vec<serde_json::Value> {
        raw.lines()
            .map(|line| {
                let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect()
    };
    assert_eq!(strip(&stdout(&single)), strip(&stdout(&parallel)));
}

#[test]
fn batch_exit_logic_flags_mismatches() {
    use rrverify_core::registry::{IdentityReport, Status};
    let ok = IdentityReport {
        id: "fake".into(),
        params: BTreeMap::new(),
        order: 5,
        status: Status::Match,
        first_mismatch: None,
        error: None,
        elapsed: None,
    };
    let mut bad = ok.clone();
    bad.status = Status::Mismatch;
    assert!(rrverify::runner::all_matched(&[("fake".into(), Ok(ok.clone()))]));
    assert!(!rrverify::runner::all_matched(&[
        ("fake".into(), Ok(ok)),
        ("fake2".into(), Ok(bad)),
    ]));
}
