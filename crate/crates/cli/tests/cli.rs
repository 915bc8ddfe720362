use std::process::Command;

use cubiccert_cli::{run, EXIT_DEGENERACY, EXIT_OK, EXIT_PRECONDITION};
use serde_json::Value;

const P1: &str = "-4*(27x^10+x^3-16x+16)";
const Q1: &str = "-16*x^5*(27x^10+x^3-16x+16)";

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["cubiccert"];
    argv.extend_from_slice(args);
    let o = run(argv);
    let v: Value = serde_json::from_str(&o.output).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", o.output));
    (o.code, v)
}

fn bin(args: &[&str], threads: Option<&str>) -> (i32, Vec<u8>) {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cubiccert"));
    c.args(args);
    match threads {
        Some(t) => c.env("CUBICCERT_THREADS", t),
        None => c.env_remove("CUBICCERT_THREADS"),
    };
    let o = c.output().unwrap();
    (o.status.code().unwrap(), o.stdout)
}

#[test]
fn classify_example() {
    let (code, v) = call(&["classify", "--p", P1, "--q", Q1]);
    assert_eq!(code, EXIT_OK);
    let c = &v["result"]["classification"];
    assert_eq!(c["verdict"], "infinite-certified");
    assert_eq!(c["discriminant_curve"]["sqfree_part"], "x^3 - 16*x + 16");
    assert_eq!(c["witness"]["certificate"]["verdict"], "positive-rank");
    assert_eq!(c["witness"]["reduction"]["curve"]["a"], "-16/1");
}

#[test]
fn cs_check_example() {
    let (code, v) = call(&["cs-check", "--g", "9", "--d1", "2", "--g1", "0", "--d2", "3", "--g2", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["bound"], 5);
    assert_eq!(v["result"]["verdict"], "excluded");
}

#[test]
fn curve_equation_input() {
    let (code, v) = call(&["disc-curve", "--curve", "y^3 - 3 y + x = 0"]);
    assert_eq!(code, EXIT_OK);
    // disc = 108 - 27 x^2
    assert_eq!(v["result"]["discriminant_curve"]["discriminant"], "-27*x^2 + 108");
    let (_, v) = call(&["genus", "--curve", "y^2 = x^5 + 1"]);
    assert_eq!(v["result"]["model"], "hyperelliptic");
    assert_eq!(v["result"]["genus"], 2);
    let (_, v) = call(&["genus", "--p", P1, "--q", Q1]);
    assert_eq!(v["result"]["genus"], 10);
    assert_eq!(v["result"]["profile"]["total_points"], 10);
}

#[test]
fn fibre_and_enumerate() {
    let (code, v) = call(&["fibre", "--p", P1, "--q", Q1, "--x0", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["certificate"]["verdict"], "cyclic-cubic");
    assert_eq!(v["result"]["recheck"], true);
    let (code, v) = call(&["enumerate", "--p", P1, "--q", Q1, "--count", "5"]);
    assert_eq!(code, EXIT_OK);
    let e = &v["result"]["enumeration"];
    assert_eq!(e["certificates"].as_array().unwrap().len(), 5);
    assert_eq!(e["certificates"][0]["x0"], "4/1");
    assert_eq!(e["skipped"][0]["x0"], "0/1");
    assert_eq!(e["skipped"][0]["reason"]["kind"], "reducible");
    assert_eq!(v["result"]["rechecked"], true);
    let (code, v) = call(&["enumerate", "--p", P1, "--q", Q1, "--count", "50", "--max-steps", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["enumeration"]["exhausted"], true);
}

#[test]
fn elliptic_commands() {
    let (code, v) = call(&["ec-search", "--a", "-672", "--b", "6840", "--height", "32"]);
    assert_eq!(code, EXIT_OK);
    let pts = v["result"]["points"].as_array().unwrap();
    assert!(pts.iter().any(|p| p["x"] == "22/1" && p["y"] == "52/1"));
    let (_, v) = call(&["ec-rank", "--a", "-672", "--b", "6840", "--x", "22", "--y", "52"]);
    assert_eq!(v["result"]["verdict"], "positive-rank");
    let (_, v) = call(&["ec-rank", "--a", "-1", "--b", "1"]);
    assert_eq!(v["result"]["verdict"], "positive-rank");
    // y^2 = x^3 + 1 has rank 0; every point in range is torsion
    let (_, v) = call(&["ec-rank", "--a", "0", "--b", "1"]);
    assert_eq!(v["result"]["verdict"], "unknown");
    let (code, _) = call(&["ec-rank", "--a", "-1", "--b", "1", "--x", "0", "--y", "2"]);
    assert_eq!(code, EXIT_PRECONDITION);
}

#[test]
fn galois_and_flexes() {
    let (_, v) = call(&["galois", "--f", "x^3 - 3x + 1"]);
    let claims = v["result"]["certificate"]["claims"].as_array().unwrap();
    assert!(claims.iter().any(|c| c == "cubic-cyclic"));
    let (_, v) = call(&["galois", "--f", "x^8 - x - 1", "--weierstrass", "--primes", "100"]);
    assert_eq!(v["result"]["weierstrass_screen"]["verdict"], "finite");
    assert_eq!(v["result"]["prime_budget"], 100);
    let (code, v) = call(&["flexes", "--quartic", "x^4 + y^4 + 1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["report"]["squarefree"], false);
    assert_eq!(v["result"]["report"]["multiplicities"][0]["multiplicity"], 2);
    assert_eq!(v["result"]["report"]["verdict"], "inconclusive");
}

#[test]
fn punctures_and_maps() {
    let (_, v) = call(&["punctures", "--p", P1, "--q", Q1, "--puncture", "0,1,2"]);
    assert_eq!(v["result"]["report"]["image_count"], 3);
    assert_eq!(v["result"]["report"]["verdict"], "finite-integral-cyclic");
    let (_, v) = call(&["punctures", "--p", "-3x", "--q", "2x", "--puncture", "1", "--puncture", "inf"]);
    assert_eq!(v["result"]["report"]["induced"], 2);
    assert_eq!(v["result"]["report"]["verdict"], "inconclusive");
    let (code, v) = call(&[
        "verify-map",
        "--source",
        "y^2 = (x^3 - x)^4 - (x^3 - x)^3 + (x^3 - x)",
        "--target",
        "y^2 = x^4 - x^3 + x",
        "--map-x",
        "x^3 - x",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["degree"], 3);
    let (code, v) = call(&["verify-map", "--source", "y^2 = x^5 + 1", "--target", "y^2 = x^5 + 1", "--map-x", "x^2"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert_eq!(v["error"]["kind"], "precondition");
}

#[test]
fn reproduce_bundles_pass() {
    for id in ["example1", "genus5", "ns13", "rank672", "punctures"] {
        let (code, v) = call(&["reproduce", id]);
        assert_eq!(code, EXIT_OK, "{id}: {v}");
        assert_eq!(v["result"]["passed"], true);
        assert!(v["result"]["assertions"].as_array().unwrap().iter().all(|a| a["pass"] == true));
    }
    let (code, v) = call(&["reproduce", "example9"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["classify", "--p", "x +", "--q", "1"], EXIT_PRECONDITION),
        (&["classify", "--p", "z", "--q", "1"], EXIT_PRECONDITION),
        (&["classify", "--p", "x"], EXIT_PRECONDITION),
        (&["frobnicate"], EXIT_PRECONDITION),
        (&["ec-search", "--a", "0", "--b", "0"], EXIT_DEGENERACY),
        (&["disc-curve", "--p", "0", "--q", "0"], EXIT_DEGENERACY),
        (&["disc-curve", "--curve", "(y - x)^3 = 0"], EXIT_DEGENERACY),
        (&["fibre", "--p", "-3x", "--q", "2x", "--x0", "0"], EXIT_DEGENERACY),
        (&["flexes", "--quartic", "x^4 + y^4 + x^2 y^2 - x^2 - y^2"], EXIT_DEGENERACY),
        (&["fibre", "--p", "-3x", "--q", "2x", "--x0", "1/0"], EXIT_PRECONDITION),
        (&["galois", "--f", "(x^2 + 1)^2"], EXIT_PRECONDITION),
        (&["enumerate", "--p", "1", "--q", "x", "--count", "0"], EXIT_PRECONDITION),
        (&["cs-check", "--g", "9", "--d1", "1", "--g1", "0", "--d2", "3", "--g2", "1"], EXIT_PRECONDITION),
        (&["genus", "--f", "@/nonexistent/input.txt"], EXIT_PRECONDITION),
    ];
    for (args, want) in cases {
        let (code, v) = call(args);
        assert_eq!(code, *want, "{args:?}: {v}");
        assert!(v["error"]["message"].is_string());
    }
    let o = run(["cubiccert", "--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.output.contains("classify"));
}

#[test]
fn file_input_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    let q = dir.path().join("q.txt");
    std::fs::write(&p, format!("{P1}\n")).unwrap();
    std::fs::write(&q, Q1).unwrap();
    let out = dir.path().join("report.json");
    let (pa, qa) = (format!("@{}", p.display()), format!("@{}", q.display()));
    let (code, stdout) = bin(&["disc-curve", "--p", &pa, "--q", &qa, "--out", out.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["discriminant_curve"]["sqfree_part"], "x^3 - 16*x + 16");
}

#[test]
fn output_is_byte_identical() {
    let runs: &[&[&str]] = &[
        &["enumerate", "--p", P1, "--q", Q1, "--count", "5"],
        &["galois", "--f", "x^8 - x - 1", "--primes", "200"],
        &["reproduce", "punctures"],
    ];
    for args in runs {
        let (c0, first) = bin(args, None);
        assert_eq!(c0, 0);
        for threads in [Some("1"), Some("3"), None] {
            let (c, again) = bin(args, threads);
            assert_eq!(c, 0);
            assert_eq!(first, again, "{args:?} with {threads:?}");
        }
        let text = String::from_utf8(first).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(cubiccert_cli::render(&v), text, "keys are not in canonical order");
    }
}

#[test]
fn bad_thread_count() {
    let (code, stdout) = bin(&["cs-check", "--g", "9", "--d1", "2", "--g1", "0", "--d2", "3", "--g2", "1"], Some("zero"));
    assert_eq!(code, EXIT_PRECONDITION);
    let v: Value = serde_json::from_slice(&stdout).unwrap();
    assert!(v["error"]["message"].as_str().unwrap().contains("CUBICCERT_THREADS"));
}
