use cubiccert_cli::{run, EXIT_DEGENERACY, EXIT_OK, EXIT_PRECONDITION};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;
use serde_json::Value;

#[derive(Clone, Copy, Debug)]
enum Kind {
    Poly,
    Rational,
    Count,
    Equation,
    Quartic,
    Points,
    Flag,
}

use Kind::*;

/// Subcommands with the flags they accept.
const SUBCOMMANDS: &[(&str, &[(&str, Kind)])] = &[
    ("genus", &[("--p", Poly), ("--q", Poly), ("--f", Poly), ("--curve", Equation)]),
    ("disc-curve", &[("--p", Poly), ("--q", Poly), ("--curve", Equation)]),
    ("classify", &[("--p", Poly), ("--q", Poly), ("--height", Count), ("--conic-height", Count)]),
    ("fibre", &[("--p", Poly), ("--q", Poly), ("--x0", Rational)]),
    ("enumerate", &[("--p", Poly), ("--q", Poly), ("--count", Count), ("--max-steps", Count), ("--height", Count)]),
    ("ec-search", &[("--a", Rational), ("--b", Rational), ("--height", Count), ("--denom", Count)]),
    ("ec-rank", &[("--a", Rational), ("--b", Rational), ("--x", Rational), ("--y", Rational), ("--height", Count)]),
    ("cs-check", &[("--g", Count), ("--d1", Count), ("--g1", Count), ("--d2", Count), ("--g2", Count)]),
    ("galois", &[("--f", Poly), ("--primes", Count), ("--weierstrass", Flag)]),
    ("flexes", &[("--quartic", Quartic), ("--primes", Count)]),
    ("punctures", &[("--p", Poly), ("--q", Poly), ("--puncture", Points)]),
    ("verify-map", &[("--source", Equation), ("--target", Equation), ("--map-x", Poly), ("--map-y", Quartic)]),
    ("reproduce", &[]),
];

/// Malformed fragments mixed into well-formed input.
fn garbage() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("".to_string()),
        Just("x +".to_string()),
        Just("z".to_string()),
        Just("1/0".to_string()),
        Just("x^99999".to_string()),
        Just("((x)".to_string()),
        Just("x = = 1".to_string()),
        "[a-z0-9+*^/() -]{0,8}",
    ]
}

fn poly(vars: &'static [&'static str], max_deg: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec((-5i64..6, 0..vars.len(), 0..=max_deg, 0..=max_deg), 0..5).prop_map(move |terms| {
        let mut s = String::from("0");
        for (c, v, e1, e2) in terms {
            s.push_str(&format!(" + ({c})*{}^{e1}", vars[v]));
            if vars.len() > 1 {
                s.push_str(&format!("*{}^{}", vars[1 - v], e2.min(max_deg - e1)));
            }
        }
        s
    })
}

fn well_formed(kind: Kind) -> BoxedStrategy<String> {
    match kind {
        Poly => poly(&["x"], 6).boxed(),
        Rational => (-20i64..21, 1i64..5).prop_map(|(n, d)| format!("{n}/{d}")).boxed(),
        Count => (0u32..7).prop_map(|n| n.to_string()).boxed(),
        Equation => prop_oneof![
            (poly(&["x"], 6), poly(&["x"], 6)).prop_map(|(p, q)| format!("y^3 + ({p}) y + {q} = 0")),
            poly(&["x"], 8).prop_map(|f| format!("y^2 = {f}")),
        ]
        .boxed(),
        Quartic => poly(&["x", "y"], 4).boxed(),
        Points => proptest::collection::vec(prop_oneof![Just("inf".to_string()), (-4i64..5).prop_map(|n| n.to_string())], 0..4)
            .prop_map(|v| v.join(","))
            .boxed(),
        Flag => Just(String::new()).boxed(),
    }
}

fn argv() -> impl Strategy<Value = Vec<String>> {
    let ids = prop_oneof![
        Just("punctures"), Just("genus5"), Just("rank672"), Just("example0"), Just("")
    ];
    let flag_values = |flags: &'static [(&'static str, Kind)]| {
        flags
            .iter()
            .map(|&(f, k)| {
                let v = prop_oneof![8 => well_formed(k), 1 => garbage()];
                proptest::option::weighted(0.75, v).prop_map(move |v| v.map(|v| (f, k, v)))
            })
            .collect::<Vec<_>>()
    };
    let cmd = proptest::sample::select(SUBCOMMANDS)
        .prop_flat_map(move |(name, flags)| (Just(name), flag_values(flags), proptest::bool::weighted(0.03)));
    (cmd, ids).prop_map(|((name, flags, stray), id)| {
        let mut v = vec!["cubiccert".to_string(), name.to_string()];
        for (f, k, x) in flags.into_iter().flatten() {
            match k {
                Flag => v.push(f.into()),
                _ => v.push(format!("{f}={x}")),
            }
        }
        if name == "reproduce" && !id.is_empty() {
            v.push(id.into());
        }
        if stray {
            v.push("--nope".into());
        }
        v
    })
}

fn check(args: &[String]) -> Result<i32, TestCaseError> {
    let o = run(args.to_vec());
    prop_assert!([EXIT_OK, EXIT_PRECONDITION, EXIT_DEGENERACY].contains(&o.code), "{args:?} -> {}", o.code);
    let v: Value = serde_json::from_str(&o.output).map_err(|e| TestCaseError::fail(format!("{args:?}: {e}")))?;
    if o.code == EXIT_OK {
        prop_assert!(v.get("result").is_some());
    } else {
        prop_assert!(v["error"]["message"].is_string());
        let kind = &v["error"]["kind"];
        match o.code {
            EXIT_DEGENERACY => prop_assert_eq!(kind, "degeneracy"),
            _ => prop_assert!(kind == "precondition" || kind == "usage", "{args:?}: {v}"),
        }
    }
    Ok(o.code)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn exit_code_contract(args in argv()) {
        check(&args)?;
    }
}

/// The generator must reach the command bodies, not just the argument
/// parser.
#[test]
fn fuzz_reaches_every_outcome() {
    let mut runner = TestRunner::deterministic();
    let strategy = argv();
    let (mut ok, mut pre, mut degen) = (0, 0, 0);
    for _ in 0..400 {
        let args = strategy.new_tree(&mut runner).unwrap().current();
        match check(&args).unwrap() {
            EXIT_OK => ok += 1,
            EXIT_DEGENERACY => degen += 1,
            _ => pre += 1,
        }
    }
    assert!(ok >= 20 && pre >= 20 && degen >= 1, "ok {ok}, precondition {pre}, degeneracy {degen}");
}
