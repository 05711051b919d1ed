use std::process::Command;

use proptest::prelude::*;
use realnf_cli::{parse_polynomial, render, OutputReport};
use realnf_core::{BiPoly, Rational};

fn realnf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_realnf")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn sparse() -> impl Strategy<Value = BiPoly<Rational>> {
    prop::collection::vec(((0u32..12, 0u32..12), -50i64..50, 1i64..9), 0..8).prop_map(|ts| {
        let mut f = BiPoly::zero();
        for (m, n, d) in ts {
            f.add_term(m, Rational::new(n.into(), d.into()));
        }
        f
    })
}

proptest! {
    #[test]
    fn render_parses_back(f in sparse()) {
        prop_assert_eq!(parse_polynomial(&render(&f)).unwrap().polynomial, f);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(realnf(&["x^3 + y^8 + 2*x*y^6"]).0, 0);
    assert_eq!(realnf(&["x^2 + y^2"]).0, 2);
    assert_eq!(realnf(&["x^2*y^2"]).0, 2);
    let (code, out, err) = realnf(&["x^3 + 2 y"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("column"), "{err}");
    assert_eq!(realnf(&["x^3 + z"]).0, 1);
    assert_eq!(realnf(&[]).0, 1);
}

#[test]
fn json_report() {
    let (code, out, _) = realnf(&["x^3 + y^8 + 2*x*y^6", "--format", "json", "--diagnostics"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["diagnostics", "input", "records", "status"]);
    let rec = &v["records"][0];
    let mut keys: Vec<&str> = rec.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["interval", "minpoly", "normal_form", "type"]);
    assert_eq!(rec["type"], "E14+");
    assert_eq!(rec["minpoly"], "z-2");
    assert_eq!(v["diagnostics"]["mu"], 14);

    let (code, out, _) = realnf(&["x^2*y^2", "--format", "json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "not-isolated");
    assert!(v["records"].as_array().unwrap().is_empty());
    assert!(v["diagnostics"]["reason"].is_string());
}

#[test]
fn text_and_json_agree() {
    for input in ["x^3 - x*y^4", "x^4 - y^4", "x^2*y^2 + x^5 + y^5", "-x^3 + y^8"] {
        let (_, text, _) = realnf(&[input]);
        let (_, json, _) = realnf(&[input, "--format", "json"]);
        let report: OutputReport = serde_json::from_str(&json).unwrap();
        let mut a = OutputReport::record_lines(&text);
        let mut b: Vec<String> = report.records.iter().map(|r| r.line()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{input}");
        assert!(!a.is_empty(), "{input}");
    }
}

#[test]
fn perturb_round_trip() {
    let (code, germ, _) = realnf(&["perturb", "--seed", "7", "--type", "E14+", "--param", "2"]);
    assert_eq!(code, 0);
    let (code, again, _) = realnf(&["perturb", "--seed", "7", "--type", "E14+", "--param", "2"]);
    assert_eq!((code, &again), (0, &germ));
    let (code, out, _) = realnf(&[germ.trim(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["records"].as_array().unwrap().iter().any(|r| r["type"] == "E14+" && r["minpoly"] == "z-2"));

    let (code, germ, _) = realnf(&["perturb", "--seed", "3", "--type", "W13-", "--param", "-1/3"]);
    assert_eq!(code, 0);
    let (_, out, _) = realnf(&[germ.trim(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["records"].as_array().unwrap().iter().any(|r| r["type"] == "W13-" && r["minpoly"] == "z+1/3"));

    assert_eq!(realnf(&["perturb", "--seed", "1", "--type", "X9++", "--param", "2"]).0, 1);
    assert_eq!(realnf(&["perturb", "--seed", "1", "--type", "Q9+", "--param", "0"]).0, 1);
}
