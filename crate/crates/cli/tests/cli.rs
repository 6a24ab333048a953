use gaussratio::cfrac_engine::{eval_cfrac, gauss_cfrac_011};
use gaussratio::hyp2f1_core::Params;
use gaussratio::Complex64 as C;
use serde_json::Value;
use std::process::{Command, Output};

fn grl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grl")).args(args).env_remove("GRL_TOL").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = grl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/output.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

const INVOCATIONS: &[&[&str]] = &[
    &["eval-ratio", "--a", "0.5", "--b", "0.5", "--c", "1", "--n1", "0", "--n2", "1", "--m", "1", "--z", "-1"],
    &["eval-ratio", "--example", "13", "--z-re", "0.4", "--z-im", "-2"],
    &["eval-2f1", "--a", "0.3", "--b", "0.6", "--c", "1.4", "--z-re", "5", "--z-im", "1"],
    &["cfrac", "--a", "0.5", "--b", "0.25", "--c", "1.25", "--z", "0.1"],
    &["cfrac", "--a", "1/2", "--b", "1/4", "--c", "5/4", "--exact", "--terms", "6"],
    &["cfrac", "--example", "4", "--terms", "5"],
    &["cfrac", "--a", "0.3", "--b", "0.6", "--c", "1.4", "--n1", "0", "--n2", "1", "--m", "0", "--z", "0.5"],
    &["classify", "--a", "0.5", "--b", "0.25", "--c", "1.25"],
    &["classify", "--a", "-2", "--b", "0.5", "--c", "1.5", "--draws", "5"],
    &["runckel", "--a", "0.3", "--b", "0.6", "--c", "1.4"],
    &["runckel", "--a", "0.3", "--b", "0.6", "--c", "0.1"],
    &["boundary", "--example", "2", "--x", "3"],
    &["boundary", "--example", "1", "--x-from", "1.5", "--x-to", "4", "--points", "4"],
    &["integral-rep", "--example", "3"],
    &["integral-rep", "--example", "1", "--z-re", "-0.5", "--z-im", "0.5"],
    &["integral-rep", "--example", "12", "--order", "2", "--z", "0.3"],
    &["verify-example", "7"],
    &["verify-example", "12", "--z", "-3"],
    &["moments", "--example", "1"],
    &["moments", "--a", "0.5", "--b", "0.5", "--c", "1"],
];

const FAILING: &[(&[&str], i32)] = &[
    (&["integral-rep", "--a", "0.3", "--b", "0.6", "--c", "0.1"], 2),
    (&["classify", "--a", "0.3", "--b", "0.6", "--c", "1.4", "--n1", "1"], 2),
    (&["verify-example", "6", "--c", "1.4"], 2),
    (&["eval-2f1", "--a", "1", "--b", "1", "--c", "-2", "--z", "0.5"], 2),
    (&["boundary", "--example", "1", "--x", "0.5"], 2),
    (&["integral-rep", "--example", "1", "--z", "2"], 2),
];

#[test]
fn eval_ratio_agrees_with_fraction() {
    let r = json(INVOCATIONS[0]);
    let f = gauss_cfrac_011(&Params::new(0.5, 0.5, 1.0).unwrap());
    let want = eval_cfrac(&f, C::new(-1.0, 0.0), 1e-15, 10_000).unwrap();
    assert!((r["result"]["re"].as_f64().unwrap() - want.re).abs() < 1e-8);
    let cf = json(&["cfrac", "--a", "0.5", "--b", "0.5", "--c", "1", "--z", "-1"]);
    assert!((cf["result"]["value"]["re"].as_f64().unwrap() - want.re).abs() < 1e-8);
}

#[test]
fn example12_identity_residual() {
    let r = json(&["verify-example", "12"]);
    let rows = r["result"]["identity"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let residual = row["residual"].as_f64().unwrap() + row["abs_error_estimate"].as_f64().unwrap();
        assert!(residual < 1e-8, "{row}");
    }
    assert!(r["result"]["report"]["max_rel_error"].as_f64().unwrap() < 1e-6);
}

#[test]
fn classify_gauss_example() {
    let r = json(&["classify", "--a", "0.5", "--b", "0.25", "--c", "1.25", "--n1", "0", "--n2", "1", "--m", "1"]);
    let res = &r["result"];
    for (key, want) in [("epsilon", Value::from(1)), ("kappa", 0.into()), ("lambda", 0.into()), ("is_rational", false.into())] {
        assert_eq!(res[key], want, "{key}");
    }
    assert_eq!(res["pick"]["kappa_max"], 0);
}

#[test]
fn exact_fraction_coefficients() {
    let r = json(INVOCATIONS[4]);
    let alphas: Vec<&str> = r["result"]["alphas"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(alphas[..3], ["1", "8/45", "35/117"]);
}

#[test]
fn outputs_match_schema() {
    let schema = schema();
    for args in INVOCATIONS {
        let doc = json(args);
        if let Err(errors) = schema.validate(&doc) {
            let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        }
        assert_eq!(doc["command"], args[0]);
    }
}

#[test]
fn failures_are_named() {
    let schema = schema();
    for (args, code) in FAILING {
        let out = grl(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(schema.is_valid(&doc), "{args:?}: {doc}");
        assert!(doc["result"].is_null());
        assert!(!doc["error"]["kind"].as_str().unwrap().is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_64() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["eval-ratio", "--a", "0.5", "--b", "0.5", "--c", "1"],
        &["eval-ratio", "--a", "0.5", "--b", "0.5", "--z", "0.1"],
        &["eval-ratio", "--a", "x", "--b", "0.5", "--c", "1", "--z", "0.1"],
        &["eval-ratio", "--a", "inf", "--b", "0.5", "--c", "1", "--z", "0.1"],
        &["eval-ratio", "--a", "0.5", "--b", "0.5", "--c", "1", "--z", "NaN"],
        &["runckel", "--a", "1", "--b", "1", "--c", "2", "--tol", "-1"],
        &["runckel", "--a", "1", "--b", "1", "--c", "2", "--format", "csv"],
        &["boundary", "--example", "1"],
        &["boundary", "--example", "1", "--x-from", "3", "--x-to", "2", "--points", "5"],
        &["verify-example", "16"],
        &["verify-example", "3", "--example", "4"],
        &["classify", "--a", "1", "--b", "1", "--c", "2", "--threads", "0"],
    ];
    for args in cases {
        let out = grl(args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn tolerance_from_environment() {
    let args = ["runckel", "--a", "0.3", "--b", "0.6", "--c", "1.4"];
    let out = Command::new(env!("CARGO_BIN_EXE_grl")).args(args).env("GRL_TOL", "1e-9").output().unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["inputs"]["tol"], 1e-9);
    let out = Command::new(env!("CARGO_BIN_EXE_grl"))
        .args(args)
        .args(["--tol", "1e-7"])
        .env("GRL_TOL", "1e-9")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["inputs"]["tol"], 1e-7);
    assert_eq!(json(&args)["inputs"]["tol"], 1e-15);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in INVOCATIONS {
        assert_eq!(grl(args).stdout, grl(args).stdout, "{args:?}");
    }
    let classify = ["classify", "--a", "-1.5", "--b", "0.3", "--c", "1.2", "--seed", "11"];
    let one = grl(&[&classify[..], &["--threads", "1"]].concat());
    let four = grl(&[&classify[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

fn csv_rows(text: &str) -> Vec<(f64, f64)> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,density"));
    lines
        .map(|l| {
            let (x, v) = l.split_once(',').unwrap();
            (x.parse().unwrap(), v.parse().unwrap())
        })
        .collect()
}

#[test]
fn example1_density_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("density.csv");
    let args = ["boundary", "--example", "1", "--x-from", "1.01", "--x-to", "10", "--points", "200", "--format", "csv"];
    let out = grl(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 200);
    assert!(rows.iter().all(|&(_, v)| v >= 0.0));
    assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
    assert_eq!(grl(&args).stdout, text.as_bytes());
}

#[test]
fn empty_range_has_header_only() {
    let out = grl(&["boundary", "--example", "1", "--x-from", "2", "--x-to", "3", "--points", "0", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x,density\n");
}

#[test]
fn example5_density_changes_sign() {
    // B·P vanishes at t = (a − b − 1)/c = 1/2, i.e. x = 2
    let args = [
        "boundary", "--example", "5", "--a", "2.5", "--b", "0.5", "--c", "2", "--x-from", "1.1", "--x-to", "6",
        "--points", "50", "--format", "csv",
    ];
    let out = grl(&args);
    assert!(out.status.success());
    let rows = csv_rows(std::str::from_utf8(&out.stdout).unwrap());
    assert!(rows.iter().any(|&(_, v)| v > 0.0) && rows.iter().any(|&(_, v)| v < 0.0));
    assert!(rows.iter().all(|&(x, v)| (x < 2.0) == (v > 0.0)));
    let doc = json(&args[..args.len() - 2]);
    assert_eq!(doc["result"]["bp_sign"], "SignChanging");
}

#[test]
fn unwritable_output_names_the_path() {
    let out = grl(&["runckel", "--a", "1", "--b", "1", "--c", "2", "--output", "/nonexistent-dir/out.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/out.json"));
}
