//! End-to-end tests of the command-line harness: JSON reports parse
//! back into `CheckReport`, certificates re-verify against freshly
//! rebuilt bimodules, and reports are deterministic given a seed.

use nilcox::algebra::{AlgebraId, AlgebraMap};
use nilcox::bimodule::{tensor_over, Bimodule};
use nilcox::functor::{d_bimodule, x_bimodule};
use nilcox::report::{map_from_json, CheckReport};
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_nilcox"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn weyl_json_certificate_reverifies() {
    let (stdout, _, code) = run(&["weyl", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let report: CheckReport = serde_json::from_str(&stdout).expect("valid report JSON");
    assert_eq!(report.check, "weyl");
    assert_eq!(report.verdict, "pass");

    // the certificate is the intertwiner from the smallest block (n = 1);
    // rebuild both sides from scratch and check it is an isomorphism of
    // bimodules intertwining both actions
    let map = map_from_json(report.certificate.as_ref().expect("certificate present"))
        .expect("certificate deserializes");
    let lhs = tensor_over(&d_bimodule(1), &x_bimodule(1)).bim;
    let a_1 = AlgebraId::nil(1);
    let xd = tensor_over(
        &x_bimodule(0),
        &Bimodule::regular(&a_1).restrict_left(&AlgebraMap::inclusion_next(&AlgebraId::nil(0))),
    )
    .bim;
    let rhs = Bimodule::direct_sum(&[&Bimodule::regular(&a_1), &xd]);
    map.verify_action(&rhs, &lhs).expect("intertwines both actions");
    assert!(map.matrix.is_invertible());
}

#[test]
fn reports_are_deterministic() {
    let strip_time = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let first = run(&["decat", "--n", "3", "--seed", "17", "--format", "json"]);
    let second = run(&["decat", "--n", "3", "--seed", "17", "--format", "json"]);
    assert_eq!(first.2, 0);
    assert_eq!(strip_time(&first.0), strip_time(&second.0));
}

#[test]
fn unknown_check_is_rejected() {
    let (_, stderr, code) = run(&["no-such-check"]);
    assert_ne!(code, 0);
    assert!(stderr.contains("unknown check"));
}

#[test]
fn dimension_bound_is_enforced() {
    let (stdout, _, code) = run(&["weyl", "--n", "5", "--max-dim", "10", "--format", "json"]);
    assert_eq!(code, 1);
    let report: CheckReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.verdict, "fail");
    assert!(report.witness.unwrap().contains("dimension bound exceeded"));
}

#[test]
fn env_var_overrides_max_dim() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilcox"))
        .args(["weyl", "--n", "5", "--format", "json"])
        .env("NILCOX_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: CheckReport =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.verdict, "fail");
}

#[test]
fn text_format_one_line_per_check() {
    let (stdout, _, code) = run(&["frobenius", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("[pass] frobenius"));
}
