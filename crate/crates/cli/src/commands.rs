use std::collections::BTreeMap;

use cubiccert::curves::{
    cs_check, genus_hyperelliptic, genus_trigonal, ramification_profile, verify_map, CsVerdict, HyperellipticModel,
    IrreducibilityWitness, RationalMap, TrigonalModel,
};
use cubiccert::cyclic::{
    classify, discriminant_curve, enumerate_cyclic_points, fibre_certificate, puncture_report, recheck_certificate,
    Puncture, SearchBudget,
};
use cubiccert::elliptic::{certify_nontorsion, nagell_lutz_screen, search_points, ECPoint, WeierstrassCurve};
use cubiccert::galois::{certify, collect_cycle_types, weierstrass_galois_screen, DEFAULT_PRIME_BUDGET};
use cubiccert::parser::{parse_bivariate, parse_equation, parse_univariate, render_bipoly};
use cubiccert::polyalg::rational::parse_rational;
use cubiccert::quartic::{flex_galois_report, TernaryQuartic};
use cubiccert::{BiPoly, Error, Rational, Result, UniPoly};
use num_traits::Signed;
use serde_json::{json, Value};

use crate::args::*;
use crate::report;

/// Prime budget of the thorough profile; large enough for the degree-24
/// flex certificate.
pub const THOROUGH_PRIME_BUDGET: usize = 1000;

/// Reads `@path` arguments from disk; anything else is literal text.
pub fn input_text(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::Precondition(format!("cannot read '{path}': {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn univariate(arg: &str, var: char) -> Result<UniPoly> {
    parse_univariate(&input_text(arg)?, var)
}

fn bivariate(arg: &str) -> Result<BiPoly> {
    parse_bivariate(&input_text(arg)?, 'x', 'y')
}

fn equation(arg: &str) -> Result<BiPoly> {
    parse_equation(&input_text(arg)?, 'x', 'y')
}

pub fn rational(arg: &str) -> Result<Rational> {
    let text = input_text(arg)?;
    parse_rational(text.trim()).ok_or_else(|| Error::Precondition(format!("'{text}' is not a rational number")))
}

fn trigonal(c: &CubicInput) -> Result<TrigonalModel> {
    match (&c.curve, &c.p, &c.q) {
        (Some(curve), _, _) => TrigonalModel::from_cubic(&equation(curve)?),
        (None, Some(p), Some(q)) => TrigonalModel::new(univariate(p, 'x')?, univariate(q, 'x')?),
        _ => Err(Error::Precondition("give --p and --q, or --curve".into())),
    }
}

fn model_json(m: &TrigonalModel) -> Value {
    json!({ "p": report::poly(m.p(), 'x'), "q": report::poly(m.q(), 'x') })
}

fn search_budget(s: &SearchArgs) -> SearchBudget {
    let mut b = match s.budget_profile {
        Profile::Quick => SearchBudget::quick(),
        Profile::Thorough => SearchBudget::thorough(),
    };
    if let Some(h) = s.height {
        b.height = h;
    }
    if let Some(e) = s.denom {
        b.denom = e;
    }
    if let Some(c) = s.conic_height {
        b.conic_height = c;
    }
    b
}

fn budget_json(b: &SearchBudget) -> Value {
    json!({ "height": b.height, "denom": b.denom, "conic_height": b.conic_height })
}

fn prime_budget(primes: Option<u64>, profile: Profile) -> usize {
    primes.map(|p| p as usize).unwrap_or(match profile {
        Profile::Quick => DEFAULT_PRIME_BUDGET,
        Profile::Thorough => THOROUGH_PRIME_BUDGET,
    })
}

pub fn dispatch(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Genus(a) => genus(a),
        Command::DiscCurve(c) => {
            let m = trigonal(c)?;
            Ok(json!({ "model": model_json(&m), "discriminant_curve": report::disc_curve(&discriminant_curve(&m)?) }))
        }
        Command::Classify(a) => {
            let m = trigonal(&a.cubic)?;
            let budget = search_budget(&a.search);
            let r = classify(&m, &budget)?;
            Ok(json!({ "model": model_json(&m), "budget": budget_json(&budget), "classification": report::classification(&r) }))
        }
        Command::Fibre(a) => {
            let m = trigonal(&a.cubic)?;
            let cert = fibre_certificate(&m, &rational(&a.x0)?)?;
            Ok(json!({
                "model": model_json(&m),
                "certificate": report::certificate(&cert),
                "recheck": recheck_certificate(&m, &cert),
            }))
        }
        Command::Enumerate(a) => enumerate(a),
        Command::EcSearch(a) => {
            let c = WeierstrassCurve::new(rational(&a.a)?, rational(&a.b)?)?;
            let b = search_budget(&a.search);
            let pts = search_points(&c, b.height, b.denom);
            Ok(json!({
                "curve": report::weierstrass(&c),
                "height": b.height,
                "denom": b.denom,
                "points": pts.iter().map(report::point).collect::<Vec<_>>(),
            }))
        }
        Command::EcRank(a) => ec_rank(a),
        Command::CsCheck(a) => {
            let r = cs_check(a.g, a.d1, a.g1, a.d2, a.g2)?;
            let verdict = match r.verdict {
                CsVerdict::Excluded => "excluded",
                CsVerdict::Inconclusive => "inconclusive",
            };
            Ok(json!({
                "genus": a.g,
                "maps": [{ "degree": a.d1, "genus": a.g1 }, { "degree": a.d2, "genus": a.g2 }],
                "bound": r.bound,
                "verdict": verdict,
            }))
        }
        Command::Galois(a) => galois(a),
        Command::Flexes(a) => {
            let q = TernaryQuartic::from_affine(&bivariate(&a.quartic)?)?;
            let r = flex_galois_report(&q, prime_budget(a.primes, a.budget_profile))?;
            Ok(json!({ "quartic": render_bipoly(&bivariate(&a.quartic)?, 'x', 'y'), "report": report::flex(&r) }))
        }
        Command::Punctures(a) => {
            let m = trigonal(&a.cubic)?;
            let ps = a.puncture.iter().map(|s| puncture(s)).collect::<Result<Vec<_>>>()?;
            Ok(json!({ "model": model_json(&m), "report": report::punctures(&puncture_report(&m, &ps)?) }))
        }
        Command::VerifyMap(a) => verify(a),
        Command::Reproduce(a) => crate::reproduce::reproduce(a.example),
    }
}

fn genus(a: &GenusArgs) -> Result<Value> {
    if let Some(f) = &a.f {
        return hyperelliptic_genus(univariate(f, 'x')?);
    }
    if let Some(curve) = &a.cubic.curve {
        let e = equation(curve)?;
        if e.degree_main() == Some(2) {
            let lead = e.coeff(2);
            if !lead.is_constant() || !e.coeff(1).is_zero() {
                return Err(Error::Precondition("degree-2 model must read c y^2 = f(x)".into()));
            }
            let f = e.coeff(0).scale(&-lead.coeff(0).recip());
            return hyperelliptic_genus(f);
        }
    }
    let m = trigonal(&a.cubic)?;
    let profile = ramification_profile(&m)?;
    let irreducibility = match m.irreducibility() {
        IrreducibilityWitness::Specialization { x0, prime } => {
            json!({ "kind": "specialization", "x0": report::rat(x0), "prime": prime })
        }
        IrreducibilityWitness::Unverified => json!({ "kind": "unverified" }),
    };
    Ok(json!({
        "model": "trigonal",
        "curve": model_json(&m),
        "genus": genus_trigonal(&m)?,
        "profile": report::profile(&profile),
        "irreducibility": irreducibility,
    }))
}

fn hyperelliptic_genus(f: UniPoly) -> Result<Value> {
    let h = HyperellipticModel::with_low_genus(f)?;
    Ok(json!({ "model": "hyperelliptic", "f": report::poly(h.f(), 'x'), "genus": genus_hyperelliptic(&h) }))
}

fn enumerate(a: &EnumerateArgs) -> Result<Value> {
    let m = trigonal(&a.cubic)?;
    let budget = search_budget(&a.search);
    let max_steps = a.max_steps.map(|s| s as usize).unwrap_or(match a.search.budget_profile {
        Profile::Quick => 256,
        Profile::Thorough => 4096,
    });
    let r = classify(&m, &budget)?;
    let e = enumerate_cyclic_points(&m, &r, a.count as usize, max_steps)?;
    let rechecked = e.certificates.iter().all(|c| recheck_certificate(&m, c));
    Ok(json!({
        "model": model_json(&m),
        "verdict": report::verdict_name(&r.verdict),
        "requested": a.count,
        "max_steps": max_steps,
        "enumeration": report::enumeration(&e),
        "rechecked": rechecked,
    }))
}

fn ec_rank(a: &EcRankArgs) -> Result<Value> {
    let c = WeierstrassCurve::new(rational(&a.curve.a)?, rational(&a.curve.b)?)?;
    let candidates = match (&a.x, &a.y) {
        (Some(x), Some(y)) => vec![ECPoint::affine(rational(x)?, rational(y)?)],
        _ => {
            let b = search_budget(&a.curve.search);
            let mut pts: Vec<ECPoint> = search_points(&c, b.height, b.denom).into_iter().filter(|p| !p.is_infinity()).collect();
            pts.sort_by_key(|p| {
                let x = p.x().unwrap();
                (x.numer().abs().max(x.denom().clone()), p.clone())
            });
            pts
        }
    };
    let mut tried = 0;
    let mut found = Value::Null;
    let mut last = Value::Null;
    for p in &candidates {
        tried += 1;
        let cert = certify_nontorsion(&c, p)?;
        let entry = json!({ "certificate": report::rank_certificate(&cert), "nagell_lutz": report::nagell_lutz(nagell_lutz_screen(&c, p)) });
        if cert.is_positive() {
            found = entry;
            break;
        }
        last = entry;
    }
    let verdict = if found.is_null() { "unknown" } else { "positive-rank" };
    Ok(json!({
        "curve": report::weierstrass(&c),
        "candidates": candidates.len(),
        "tried": tried,
        "verdict": verdict,
        "witness": if found.is_null() { last } else { found },
    }))
}

fn galois(a: &GaloisArgs) -> Result<Value> {
    let f = univariate(&a.f, 'x')?;
    let budget = prime_budget(a.primes, a.budget_profile);
    let ev = collect_cycle_types(&f, budget)?;
    let cert = certify(&ev)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for t in &ev.types {
        let key = t.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        *counts.entry(key).or_default() += 1;
    }
    let skipped: Vec<Value> = ev.skipped.iter().map(|(p, why)| json!({ "prime": p, "reason": why })).collect();
    let screen = if a.weierstrass { report::screen(&weierstrass_galois_screen(&f, budget)?) } else { Value::Null };
    Ok(json!({
        "polynomial": report::poly(&f, 'x'),
        "prime_budget": budget,
        "good_primes": ev.types.len(),
        "cycle_type_counts": counts,
        "skipped": skipped,
        "certificate": report::galois(&cert),
        "weierstrass_screen": screen,
    }))
}

fn puncture(s: &str) -> Result<Puncture> {
    match s.trim() {
        "inf" | "infinity" | "oo" => Ok(Puncture::Infinity),
        t => Ok(Puncture::Finite(rational(t)?)),
    }
}

fn verify(a: &MapArgs) -> Result<Value> {
    let source = equation(&a.source)?;
    let target = equation(&a.target)?;
    let one = || BiPoly::constant(Rational::from_integer(1.into()));
    let den = |d: &Option<String>| d.as_deref().map(bivariate).transpose().map(|d| d.unwrap_or_else(one));
    let map = RationalMap {
        x_num: bivariate(&a.map_x)?,
        x_den: den(&a.map_x_den)?,
        y_num: bivariate(&a.map_y)?,
        y_den: den(&a.map_y_den)?,
    };
    if map.x_den.is_zero() || map.y_den.is_zero() {
        return Err(Error::Precondition("map denominator is zero".into()));
    }
    let degree = verify_map(&source, &target, &map)?;
    Ok(json!({
        "source": render_bipoly(&source, 'x', 'y'),
        "target": render_bipoly(&target, 'x', 'y'),
        "degree": degree,
    }))
}
