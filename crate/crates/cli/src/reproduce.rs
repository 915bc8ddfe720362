//! Bundled example pipelines with one pass/fail line per assertion.

use cubiccert::curves::{
    cs_bound, cs_check, genus_hyperelliptic, genus_trigonal, ramification_profile, verify_map, weier_budget,
    CsVerdict, HyperellipticModel, Partition, RationalMap, TrigonalModel,
};
use cubiccert::cyclic::enumerate::SkipReason;
use cubiccert::cyclic::{
    classify, discriminant_curve, enumerate_cyclic_points, puncture_report, recheck_certificate, FibreVerdict,
    Puncture, PunctureVerdict, SearchBudget, Verdict, Witness,
};
use cubiccert::elliptic::{certify_nontorsion, quartic_to_weierstrass, search_points, ECPoint, WeierstrassCurve};
use cubiccert::galois::Claim;
use cubiccert::parser::{parse_bivariate, parse_equation, parse_univariate, render_poly};
use cubiccert::polyalg::cubic_discriminant;
use cubiccert::quartic::{flex_galois_report, FlexVerdict, TernaryQuartic};
use cubiccert::{BiPoly, Rational, Result, UniPoly};
use serde_json::{json, Value};

use crate::args::ExampleId;
use crate::commands::THOROUGH_PRIME_BUDGET;
use crate::report;

pub const EXAMPLE1_P: &str = "-4*(27x^10 + x^3 - 16x + 16)";
pub const EXAMPLE1_Q: &str = "-16*x^5*(27x^10 + x^3 - 16x + 16)";
pub const NS13: &str = "x y^3 + x^2 y^2 + y^3 + 2 x y^2 - x^3 + 2 x y + 2 x - y";

#[derive(Default)]
struct Bundle {
    assertions: Vec<Value>,
}

impl Bundle {
    fn check(&mut self, name: &str, pass: bool, detail: Value) {
        self.assertions.push(json!({ "name": name, "pass": pass, "detail": detail }));
    }

    fn finish(self, id: &str) -> Value {
        let passed = self.assertions.iter().all(|a| a["pass"] == Value::Bool(true));
        json!({ "example": id, "assertions": self.assertions, "passed": passed })
    }
}

fn uni(s: &str) -> Result<UniPoly> {
    parse_univariate(s, 'x')
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn reproduce(id: ExampleId) -> Result<Value> {
    match id {
        ExampleId::Example1 => example1(),
        ExampleId::Genus5 => genus5(),
        ExampleId::Ns13 => ns13(),
        ExampleId::Rank672 => rank672(),
        ExampleId::Punctures => punctures(),
    }
}

fn example1_model() -> Result<TrigonalModel> {
    TrigonalModel::new(uni(EXAMPLE1_P)?, uni(EXAMPLE1_Q)?)
}

fn example1() -> Result<Value> {
    let mut b = Bundle::default();
    let m = example1_model()?;

    let expected = &uni("256 (27x^10 + x^3 - 16x + 16)^2")? * &uni("x^3 - 16x + 16")?;
    let disc = cubic_discriminant(m.p(), m.q());
    b.check("discriminant", disc == expected, report::poly(&disc, 'x'));

    let profile = ramification_profile(&m)?;
    let g = genus_trigonal(&m)?;
    b.check("genus", g == 10, json!(g));
    let total = profile.count(Partition::Total);
    b.check("total-ramification-points", total == 10, json!(total));

    let d = discriminant_curve(&m)?;
    let sq = render_poly(&d.sqfree_part, 'x');
    b.check("disc-curve", sq == "x^3 - 16*x + 16" && d.genus == 1, json!({ "sqfree_part": sq, "genus": d.genus }));

    let r = classify(&m, &SearchBudget::quick())?;
    let positive = matches!(r.witness(), Some(Witness::PositiveRank { certificate, .. }) if certificate.is_positive());
    b.check(
        "classify-infinite",
        matches!(r.verdict, Verdict::InfiniteCertified(_)) && positive,
        json!({ "verdict": report::verdict_name(&r.verdict), "witness": r.witness().map(report::witness) }),
    );

    let e = enumerate_cyclic_points(&m, &r, 5, 64)?;
    let all_cyclic = e.certificates.iter().all(|c| c.verdict == FibreVerdict::CyclicCubic);
    b.check(
        "five-certificates",
        e.certificates.len() == 5 && all_cyclic,
        json!(e.certificates.iter().map(|c| report::rat(&c.x0)).collect::<Vec<_>>()),
    );
    let rechecked = e.certificates.iter().all(|c| recheck_certificate(&m, c));
    b.check("recheck", rechecked, json!(rechecked));
    let zero_skipped = e
        .skipped
        .iter()
        .any(|s| s.x0 == Some(rat(0)) && matches!(s.reason, SkipReason::Reducible { .. }));
    b.check("x0-zero-reducible", zero_skipped, json!(e.skipped.len()));
    Ok(b.finish("example1"))
}

fn genus5() -> Result<Value> {
    let mut b = Bundle::default();
    let f11 = uni("(x - 1)(x + 1)(x^9 - x^7 + x^6 + 2x^5 - 3x^4 - x^3 + 3x^2 - 1)")?;
    let g11 = genus_hyperelliptic(&HyperellipticModel::new(f11)?);
    b.check("degree-11-genus", g11 == 5, json!(g11));
    let f12 = uni("(x^3 - x)^4 - (x^3 - x)^3 + (x^3 - x)")?;
    let g12 = genus_hyperelliptic(&HyperellipticModel::new(f12)?);
    b.check("degree-12-genus", g12 == 5, json!(g12));

    let source = parse_equation("y^2 = (x^3 - x)^4 - (x^3 - x)^3 + (x^3 - x)", 'x', 'y')?;
    let target = parse_equation("y^2 = x^4 - x^3 + x", 'x', 'y')?;
    let map = RationalMap::polynomial(parse_bivariate("x^3 - x", 'x', 'y')?, BiPoly::main_var());
    let degree = verify_map(&source, &target, &map)?;
    b.check("triple-cover", degree == 3, json!(degree));

    let red = quartic_to_weierstrass(&uni("x^4 - x^3 + x")?, None)?;
    let want = WeierstrassCurve::from_ints(-1, 1)?;
    b.check("quartic-to-cubic", red.curve == want, report::weierstrass(&red.curve));

    let cert = certify_nontorsion(&want, &ECPoint::affine(rat(0), rat(1)))?;
    b.check("positive-rank", cert.is_positive(), report::rank_certificate(&cert));
    Ok(b.finish("genus5"))
}

fn ns13() -> Result<Value> {
    let mut b = Bundle::default();
    let q = TernaryQuartic::from_affine(&parse_bivariate(NS13, 'x', 'y')?)?;
    let r = flex_galois_report(&q, THOROUGH_PRIME_BUDGET)?;
    let deg = r.flex.polynomial.degree_or_zero();
    b.check("flex-degree", deg == 24, json!(deg));
    b.check("flex-squarefree", r.flex.squarefree, json!({ "shear": r.flex.shear }));
    b.check(
        "two-transitive",
        r.certificate.has(Claim::TwoTransitive),
        json!(r.certificate.claims.iter().map(|c| c.name()).collect::<Vec<_>>()),
    );
    b.check("finite", matches!(r.verdict, FlexVerdict::Finite { .. }), report::flex(&r)["verdict"].clone());
    Ok(b.finish("ns13"))
}

fn rank672() -> Result<Value> {
    let mut b = Bundle::default();
    let e = WeierstrassCurve::from_ints(-672, 6840)?;
    let pts = search_points(&e, 32, 1);
    let p = ECPoint::affine(rat(22), rat(52));
    b.check("point-found", pts.contains(&p), json!(pts.len()));
    let cert = certify_nontorsion(&e, &p)?;
    b.check("positive-rank", cert.is_positive(), report::rank_certificate(&cert));

    let y = uni("7 (8x^3 + 1)(x^3 + 1)(x^2 - 5x + 7)(x^2 + x + 7)(x^2 + 4x + 7)")?;
    let gy = genus_hyperelliptic(&HyperellipticModel::new(y)?);
    b.check("cover-genus", gy == 5, json!(gy));

    let xf = "14 (2x - 1)(x + 6)(4x^2 - 6x + 9)(x^2 + 2x + 4)(x^2 + 6x - 3)";
    let gx = genus_hyperelliptic(&HyperellipticModel::new(uni(xf)?)?);
    b.check("quotient-genus", gx == 3, json!(gx));

    let bound = cs_bound(2, 0, 3, 0)?;
    let cs = cs_check(gx as u64, 2, 0, 3, 0)?;
    b.check("not-trigonal", bound == 2 && cs.verdict == CsVerdict::Excluded, json!(bound));

    let w = weier_budget(3, false)?;
    b.check("triple-budget", w.max_triple == 5, json!(w.max_triple));

    // (x, y) -> (-3/x, 9y/x^4) preserves the model
    let curve = parse_equation(&format!("y^2 = {xf}"), 'x', 'y')?;
    let involution = RationalMap {
        x_num: BiPoly::constant(rat(-3)),
        x_den: BiPoly::secondary_var(),
        y_num: BiPoly::main_var().scale(&rat(9)),
        y_den: BiPoly::secondary_var().pow(4),
    };
    let degree = verify_map(&curve, &curve, &involution)?;
    b.check("involution", degree == 1, json!(degree));
    Ok(b.finish("rank672"))
}

fn punctures() -> Result<Value> {
    let mut b = Bundle::default();
    let finite = |v: &PunctureVerdict| matches!(v, PunctureVerdict::FiniteIntegralCyclic { .. });
    let m = example1_model()?;
    let three: Vec<Puncture> = (0..3).map(|i| Puncture::Finite(rat(i))).collect();
    let r = puncture_report(&m, &three)?;
    b.check("example1-three-images", r.image_count == 3 && finite(&r.verdict), report::punctures(&r));
    let r = puncture_report(&m, &[])?;
    b.check("example1-empty", !finite(&r.verdict), report::punctures(&r));

    let m0 = TrigonalModel::new(uni("-3x")?, uni("2x")?)?;
    let r = puncture_report(&m0, &[Puncture::Finite(rat(1)), Puncture::Finite(rat(2))])?;
    b.check("genus0-three-induced", r.induced == 3 && finite(&r.verdict), report::punctures(&r));
    let r = puncture_report(&m0, &[Puncture::Finite(rat(1)), Puncture::Infinity])?;
    b.check("genus0-two-induced", r.induced == 2 && !finite(&r.verdict), report::punctures(&r));
    Ok(b.finish("punctures"))
}
