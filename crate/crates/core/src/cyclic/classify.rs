use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::curves::TrigonalModel;
use crate::elliptic::{
    certify_nontorsion, quartic_to_weierstrass, search_points, ECPoint, LongWeierstrass, QuarticPoint,
    QuarticReduction, RankCertificate, ShortTransform, WeierstrassCurve,
};
use crate::elliptic::quartic::scan_quartic_points;
use crate::error::Result;
use crate::polyalg::rational::{int, is_square_rational, Rational};
use crate::polyalg::unipoly::UniPoly;

use super::conic::{conic_local_screen, LocalVerdict};
use super::disc_curve::{discriminant_curve, DiscShape, DiscriminantCurve};

/// Search limits for [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Numerator bound for the elliptic point search.
    pub height: u64,
    /// Denominator bound `e` (points have `x = m / e^2`).
    pub denom: u64,
    /// Height bound for rational points on conics and quartics.
    pub conic_height: i64,
}

impl SearchBudget {
    pub fn quick() -> Self {
        Self { height: 32, denom: 1, conic_height: 50 }
    }

    pub fn thorough() -> Self {
        Self { height: 10_000, denom: 8, conic_height: 200 }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::quick()
    }
}

/// `x = x_num(t) / x_den(t)`, `w = w_num(t) / w_den(t)` on `w^2 = c S(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub x_num: UniPoly,
    pub x_den: UniPoly,
    pub w_num: UniPoly,
    pub w_den: UniPoly,
}

impl Parametrization {
    /// The point at parameter `t`, or `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<(Rational, Rational)> {
        let xd = self.x_den.eval(t);
        let wd = self.w_den.eval(t);
        if xd.is_zero() || wd.is_zero() {
            return None;
        }
        Some((self.x_num.eval(t) / xd, self.w_num.eval(t) / wd))
    }
}

/// The transformation record between the discriminant curve and a short
/// Weierstrass model.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscReduction {
    /// Cubic `c S`: `X = c x`, `Y = c w` onto the long model, then shortened.
    Cubic { class: Rational, long: LongWeierstrass, curve: WeierstrassCurve, transform: ShortTransform },
    /// Quartic `c S` through a rational point.
    Quartic(Box<QuarticReduction>),
}

impl DiscReduction {
    pub fn curve(&self) -> &WeierstrassCurve {
        match self {
            DiscReduction::Cubic { curve, .. } => curve,
            DiscReduction::Quartic(r) => &r.curve,
        }
    }

    /// Base coordinate `x0` of a point of the short model, or `None` when it
    /// lies over `x = infinity`.
    pub fn base_x(&self, p: &ECPoint) -> Result<Option<Rational>> {
        match self {
            DiscReduction::Cubic { class, curve, transform, .. } => {
                if !curve.contains(p) {
                    return Err(crate::error::Error::OffCurve);
                }
                Ok(transform.backward(p).x().map(|x| x / class))
            }
            DiscReduction::Quartic(r) => match r.from_curve(p)? {
                QuarticPoint::Affine { u, .. } => Ok(Some(u)),
                QuarticPoint::Infinity { .. } => Ok(None),
            },
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Parametrization(Parametrization),
    PositiveRank { reduction: DiscReduction, certificate: RankCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The discriminant is a square: every irreducible fibre is cyclic.
    C3Cover,
    InfiniteCertified(Box<Witness>),
    /// Finitely many cyclic fibres, with the reason.
    Finite(String),
    /// The budget did not settle the question.
    Unknown(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub curve: DiscriminantCurve,
    pub verdict: Verdict,
}

impl ClassificationReport {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::InfiniteCertified(w) => Some(w),
            _ => None,
        }
    }
}

fn naive_height(r: &Rational) -> num_bigint::BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// Rationals `m / n` with `1 <= n <= h`, `|m| <= h`, `gcd(m, n) = 1`, in
/// order of `n` then `|m|`.
fn small_rationals(h: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for n in 1..=h {
        for m in 0..=h {
            if m.gcd(&n) != 1 {
                continue;
            }
            out.push(Rational::new(m.into(), n.into()));
            if m != 0 {
                out.push(Rational::new((-m).into(), n.into()));
            }
        }
    }
    out
}

/// First rational point of `w^2 = f(x)` in [`small_rationals`] order.
fn find_point(f: &UniPoly, h: i64) -> Option<(Rational, Rational)> {
    small_rationals(h)
        .par_iter()
        .find_map_first(|x| is_square_rational(&f.eval(x)).map(|w| (x.clone(), w)))
}

/// Non-torsion point on `curve` by increasing search heights; candidates are
/// tried in order of naive height.
pub(crate) fn find_rank_witness(curve: &WeierstrassCurve, budget: &SearchBudget) -> Result<Option<RankCertificate>> {
    let mut tried = std::collections::BTreeSet::new();
    let mut h = 8u64.min(budget.height);
    loop {
        let mut pts: Vec<ECPoint> =
            search_points(curve, h, budget.denom).into_iter().filter(|p| !p.is_infinity()).collect();
        pts.sort_by_key(|p| (naive_height(p.x().unwrap()), p.clone()));
        for p in pts {
            if !tried.insert(p.clone()) {
                continue;
            }
            let cert = certify_nontorsion(curve, &p)?;
            if cert.is_positive() {
                return Ok(Some(cert));
            }
        }
        if h >= budget.height {
            return Ok(None);
        }
        h = (h * 4).min(budget.height);
    }
}

fn genus0(d: &DiscriminantCurve, budget: &SearchBudget) -> Verdict {
    let s = &d.sqfree_part;
    let c = d.class();
    let t = UniPoly::x();
    let one = UniPoly::one();
    let param = if s.degree() == Some(1) {
        // c (x + s0) = t^2
        let s0 = s.coeff(0);
        Parametrization {
            x_num: &(&t * &t) - &UniPoly::constant(&c * &s0),
            x_den: UniPoly::constant(c),
            w_num: t,
            w_den: one,
        }
    } else if c.is_one() {
        // lines w = x + t through a point at infinity
        let (s0, s1) = (s.coeff(0), s.coeff(1));
        let den = &t.scale(&int(2)) - &UniPoly::constant(s1.clone());
        Parametrization {
            x_num: &UniPoly::constant(s0.clone()) - &(&t * &t),
            x_den: den.clone(),
            w_num: UniPoly::new(vec![s0, -s1, int(1)]),
            w_den: den,
        }
    } else {
        let s1 = s.coeff(1);
        let disc = &s1 * &s1 - int(4) * s.coeff(0);
        // w^2 = c X^2 + k with X = x + s1/2
        let k = -&c * &disc / int(4);
        let local = conic_local_screen(&c, &k);
        if let LocalVerdict::Insoluble { place } = &local {
            return Verdict::Finite(format!("conic has no points over the completion at {place}"));
        }
        let Some((x1, w1)) = find_point(&d.rhs(), budget.conic_height) else {
            return Verdict::Unknown(match local {
                LocalVerdict::Soluble => "conic is locally soluble but no point found within the height bound".into(),
                _ => "local solvability undecided and no point found".into(),
            });
        };
        // lines w = w1 + t (x - x1) through (x1, w1)
        let den = &(&t * &t) - &UniPoly::constant(c.clone());
        Parametrization {
            x_num: UniPoly::new(vec![&c * (&x1 + &s1), int(-2) * &w1, x1.clone()]),
            x_den: den.clone(),
            w_num: UniPoly::new(vec![-&c * &w1, &c * (int(2) * &x1 + &s1), -w1]),
            w_den: den,
        }
    };
    Verdict::InfiniteCertified(Box::new(Witness::Parametrization(param)))
}

fn genus1_reduction(d: &DiscriminantCurve, budget: &SearchBudget) -> Result<Option<DiscReduction>> {
    let s = &d.sqfree_part;
    let c = d.class();
    if s.degree() == Some(3) {
        let long = LongWeierstrass {
            a1: int(0),
            a2: &c * s.coeff(2),
            a3: int(0),
            a4: &c * &c * s.coeff(1),
            a6: &c * &c * &c * s.coeff(0),
        };
        let (curve, transform) = long.to_short()?;
        return Ok(Some(DiscReduction::Cubic { class: c, long, curve, transform }));
    }
    let f = d.rhs();
    if let Ok(r) = quartic_to_weierstrass(&f, None) {
        return Ok(Some(DiscReduction::Quartic(Box::new(r))));
    }
    let point = scan_quartic_points(&f, budget.conic_height)
        .into_iter()
        .next()
        .or_else(|| find_point(&f, budget.conic_height).map(|(u, y)| QuarticPoint::affine(u, y)));
    match point {
        Some(p) => Ok(Some(DiscReduction::Quartic(Box::new(quartic_to_weierstrass(&f, Some(&p))?)))),
        None => Ok(None),
    }
}

pub fn classify(m: &TrigonalModel, budget: &SearchBudget) -> Result<ClassificationReport> {
    let curve = discriminant_curve(m)?;
    let verdict = match curve.shape {
        DiscShape::Split => Verdict::C3Cover,
        DiscShape::ConstantNonSquare => Verdict::Finite(format!(
            "discriminant is {} times a square, so no unramified fibre has square discriminant",
            curve.scalar_class
        )),
        DiscShape::Genus0 => genus0(&curve, budget),
        DiscShape::Genus1 => match genus1_reduction(&curve, budget)? {
            None => Verdict::Unknown("no rational point found on the genus-1 discriminant curve".into()),
            Some(reduction) => match find_rank_witness(reduction.curve(), budget)? {
                Some(certificate) => {
                    Verdict::InfiniteCertified(Box::new(Witness::PositiveRank { reduction, certificate }))
                }
                None => Verdict::Unknown("no non-torsion point found within the search budget".into()),
            },
        },
        DiscShape::HigherGenus => Verdict::Finite(format!(
            "discriminant curve has genus {} >= 2 and finitely many rational points (Faltings)",
            curve.genus
        )),
    };
    Ok(ClassificationReport { curve, verdict })
}
