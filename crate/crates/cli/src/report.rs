//! JSON views of core report types. Rationals render as `"num/den"` and
//! polynomials in descending-degree parser text.

use cubiccert::curves::{Location, Partition, RamificationProfile};
use cubiccert::cyclic::enumerate::SkipReason;
use cubiccert::cyclic::{
    ClassificationReport, CubicFieldCertificate, DiscReduction, DiscShape, DiscriminantCurve, Enumeration,
    FibreVerdict, IrreducibilityEvidence, Puncture, PunctureReport, PunctureVerdict, Verdict, Witness,
};
use cubiccert::elliptic::{ECPoint, NagellLutz, RankCertificate, RankVerdict, WeierstrassCurve};
use cubiccert::galois::{CycleType, GaloisCertificate, ScreenVerdict, WeierstrassScreen};
use cubiccert::parser::render_poly;
use cubiccert::polyalg::rational::to_text;
use cubiccert::quartic::{FlexReport, FlexVerdict};
use cubiccert::{Rational, UniPoly};
use serde_json::{json, Value};

pub fn rat(r: &Rational) -> Value {
    Value::String(to_text(r))
}

pub fn poly(p: &UniPoly, var: char) -> Value {
    Value::String(render_poly(p, var))
}

pub fn point(p: &ECPoint) -> Value {
    match p {
        ECPoint::Infinity => Value::String("infinity".into()),
        ECPoint::Affine { x, y } => json!({ "x": rat(x), "y": rat(y) }),
    }
}

pub fn weierstrass(c: &WeierstrassCurve) -> Value {
    json!({ "a": rat(c.a()), "b": rat(c.b()), "discriminant": rat(&c.discriminant()) })
}

fn partition(p: Partition) -> &'static str {
    match p {
        Partition::Unramified => "unramified",
        Partition::Simple => "simple",
        Partition::Total => "total",
    }
}

pub fn profile(r: &RamificationProfile) -> Value {
    let places: Vec<Value> = r
        .places
        .iter()
        .map(|pl| {
            let location = match &pl.location {
                Location::Finite(f) => poly(f, 'x'),
                Location::Infinity => Value::String("infinity".into()),
            };
            json!({
                "location": location,
                "partition": partition(pl.partition),
                "weight": pl.weight,
                "valuations": {
                    "p": pl.valuations.p,
                    "q": pl.valuations.q,
                    "disc": pl.valuations.disc,
                },
            })
        })
        .collect();
    json!({
        "places": places,
        "total_ramification": r.total_ram,
        "simple_points": r.count(Partition::Simple),
        "total_points": r.count(Partition::Total),
    })
}

pub fn shape(s: DiscShape) -> &'static str {
    match s {
        DiscShape::Split => "split",
        DiscShape::ConstantNonSquare => "constant-non-square",
        DiscShape::Genus0 => "genus0",
        DiscShape::Genus1 => "genus1",
        DiscShape::HigherGenus => "higher-genus",
    }
}

pub fn disc_curve(d: &DiscriminantCurve) -> Value {
    json!({
        "discriminant": poly(&d.discriminant, 'x'),
        "sqfree_part": poly(&d.sqfree_part, 'x'),
        "square_cofactor": poly(&d.square_cofactor, 'x'),
        "scalar": rat(&d.scalar),
        "class": rat(&d.class()),
        "rhs": poly(&d.rhs(), 'x'),
        "shape": shape(d.shape),
        "genus": d.genus,
    })
}

pub fn rank_certificate(c: &RankCertificate) -> Value {
    let (verdict, order) = match &c.verdict {
        RankVerdict::PositiveRank => ("positive-rank", Value::Null),
        RankVerdict::Unknown { order } => ("torsion", json!(order)),
    };
    json!({
        "witness": point(&c.witness),
        "multiples_checked": c.multiples_checked,
        "verdict": verdict,
        "order": order,
    })
}

pub fn nagell_lutz(n: NagellLutz) -> &'static str {
    match n {
        NagellLutz::Consistent => "consistent-with-torsion",
        NagellLutz::Violated => "non-torsion",
        NagellLutz::NotApplicable => "not-applicable",
    }
}

fn reduction(r: &DiscReduction) -> Value {
    match r {
        DiscReduction::Cubic { class, long, curve, transform } => json!({
            "kind": "cubic",
            "class": rat(class),
            "long": {
                "a1": rat(&long.a1), "a2": rat(&long.a2), "a3": rat(&long.a3),
                "a4": rat(&long.a4), "a6": rat(&long.a6),
            },
            "curve": weierstrass(curve),
            "shift": rat(&transform.shift),
            "lambda": rat(&transform.lambda),
        }),
        DiscReduction::Quartic(q) => json!({
            "kind": "quartic",
            "quartic": poly(&q.quartic, 'u'),
            "curve": weierstrass(&q.curve),
        }),
    }
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Parametrization(p) => json!({
            "kind": "parametrization",
            "x": { "num": poly(&p.x_num, 't'), "den": poly(&p.x_den, 't') },
            "w": { "num": poly(&p.w_num, 't'), "den": poly(&p.w_den, 't') },
        }),
        Witness::PositiveRank { reduction: r, certificate } => json!({
            "kind": "positive-rank",
            "reduction": reduction(r),
            "certificate": rank_certificate(certificate),
        }),
    }
}

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::C3Cover => "c3-cover",
        Verdict::InfiniteCertified(_) => "infinite-certified",
        Verdict::Finite(_) => "finite",
        Verdict::Unknown(_) => "unknown",
    }
}

pub fn classification(r: &ClassificationReport) -> Value {
    let (reason, wit) = match &r.verdict {
        Verdict::C3Cover => (Value::Null, Value::Null),
        Verdict::InfiniteCertified(w) => (Value::Null, witness(w)),
        Verdict::Finite(s) | Verdict::Unknown(s) => (Value::String(s.clone()), Value::Null),
    };
    json!({
        "discriminant_curve": disc_curve(&r.curve),
        "verdict": verdict_name(&r.verdict),
        "reason": reason,
        "witness": wit,
    })
}

fn evidence(e: &IrreducibilityEvidence) -> Value {
    match e {
        IrreducibilityEvidence::IrreducibleModP { prime } => json!({ "kind": "irreducible-mod-p", "prime": prime }),
        IrreducibilityEvidence::NoRationalRoot => json!({ "kind": "no-rational-root" }),
        IrreducibilityEvidence::RationalRoot { root } => json!({ "kind": "rational-root", "root": rat(root) }),
        IrreducibilityEvidence::Undecided => json!({ "kind": "undecided" }),
    }
}

pub fn fibre_verdict(v: FibreVerdict) -> &'static str {
    match v {
        FibreVerdict::CyclicCubic => "cyclic-cubic",
        FibreVerdict::NonCyclicCubic => "non-cyclic-cubic",
        FibreVerdict::Reducible => "reducible",
        FibreVerdict::Undecided => "undecided",
    }
}

pub fn certificate(c: &CubicFieldCertificate) -> Value {
    json!({
        "x0": rat(&c.x0),
        "fibre": poly(&c.fibre, 'y'),
        "discriminant": rat(&c.discriminant),
        "disc_sqrt": c.disc_sqrt.as_ref().map(rat),
        "evidence": evidence(&c.evidence),
        "verdict": fibre_verdict(c.verdict),
    })
}

fn skip_reason(r: &SkipReason) -> Value {
    match r {
        SkipReason::Ramified => json!({ "kind": "ramified" }),
        SkipReason::Reducible { root } => json!({ "kind": "reducible", "root": rat(root) }),
        SkipReason::Undecided => json!({ "kind": "undecided" }),
        SkipReason::NonCyclic => json!({ "kind": "non-cyclic" }),
        SkipReason::AtInfinity => json!({ "kind": "at-infinity" }),
    }
}

pub fn enumeration(e: &Enumeration) -> Value {
    let skipped: Vec<Value> = e
        .skipped
        .iter()
        .map(|s| json!({ "step": s.step, "x0": s.x0.as_ref().map(rat), "reason": skip_reason(&s.reason) }))
        .collect();
    json!({
        "certificates": e.certificates.iter().map(certificate).collect::<Vec<_>>(),
        "skipped": skipped,
        "exhausted": e.exhausted,
        "steps": e.steps,
    })
}

fn cycle_type(c: &CycleType) -> Value {
    json!({ "prime": c.prime, "parts": c.parts })
}

pub fn galois(c: &GaloisCertificate) -> Value {
    let witnesses: Vec<Value> = c
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "claim": w.claim.name(),
                "cycle_types": w.cycle_types.iter().map(cycle_type).collect::<Vec<_>>(),
                "uses_discriminant": w.uses_discriminant,
            })
        })
        .collect();
    json!({
        "degree": c.degree,
        "claims": c.claims.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "witnesses": witnesses,
        "disc_square": c.disc_square,
    })
}

pub fn screen(s: &WeierstrassScreen) -> Value {
    let (verdict, detail) = match &s.verdict {
        ScreenVerdict::Finite { assumptions } => ("finite", json!({ "assumptions": assumptions })),
        ScreenVerdict::Inconclusive { reason } => ("inconclusive", json!({ "reason": reason })),
    };
    json!({ "genus": s.genus, "verdict": verdict, "detail": detail })
}

pub fn flex(r: &FlexReport) -> Value {
    let (verdict, detail) = match &r.verdict {
        FlexVerdict::Finite { assumptions } => ("finite", json!({ "assumptions": assumptions })),
        FlexVerdict::Inconclusive { reason } => ("inconclusive", json!({ "reason": reason })),
    };
    let mults: Vec<Value> = r.flex.multiplicities.iter().map(|(m, n)| json!({ "multiplicity": m, "roots": n })).collect();
    json!({
        "flex_polynomial": poly(&r.flex.polynomial, 'y'),
        "degree": r.flex.polynomial.degree_or_zero(),
        "resultant_degree": r.flex.resultant.degree_or_zero(),
        "shear": r.flex.shear,
        "squarefree": r.flex.squarefree,
        "multiplicities": mults,
        "galois": galois(&r.certificate),
        "verdict": verdict,
        "detail": detail,
    })
}

pub fn puncture(p: &Puncture) -> Value {
    match p {
        Puncture::Finite(r) => rat(r),
        Puncture::Infinity => Value::String("infinity".into()),
    }
}

pub fn punctures(r: &PunctureReport) -> Value {
    let (verdict, detail) = match &r.verdict {
        PunctureVerdict::FiniteIntegralCyclic { rule } => ("finite-integral-cyclic", json!({ "rule": rule })),
        PunctureVerdict::Inconclusive { reason } => ("inconclusive", json!({ "reason": reason })),
    };
    json!({
        "punctures": r.punctures.iter().map(puncture).collect::<Vec<_>>(),
        "image_count": r.image_count,
        "induced": r.induced,
        "disc_genus": r.disc_genus,
        "verdict": verdict,
        "detail": detail,
    })
}
