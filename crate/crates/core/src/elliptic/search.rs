use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyalg::rational::{denominator_lcm, Rational};

use super::curve::{ECPoint, WeierstrassCurve};

pub const DEFAULT_HEIGHT: u64 = 10_000;
pub const DEFAULT_DENOM: u64 = 8;

/// Multiples checked against the identity; rational torsion has order at
/// most 12.
pub const MAZUR_BOUND: i64 = 12;

/// Affine points with `x = m / e^2`, `|m| <= height * e^2`, `1 <= e <= denom`,
/// sorted by `(x, y)`.
pub fn search_points(c: &WeierstrassCurve, height: u64, denom: u64) -> Vec<ECPoint> {
    // e^6 L y^2 = L m^3 + (L a) m e^4 + (L b) e^6 with L the common denominator
    let l = denominator_lcm([c.a(), c.b()]);
    let la = (c.a() * Rational::from_integer(l.clone())).to_integer();
    let lb = (c.b() * Rational::from_integer(l.clone())).to_integer();
    let mut points: Vec<ECPoint> = (1..=denom.max(1))
        .into_par_iter()
        .flat_map_iter(|e| {
            let e = BigInt::from(e);
            let e2 = &e * &e;
            let e3 = &e2 * &e;
            let e4 = &e2 * &e2;
            let e6 = &e3 * &e3;
            let bound = BigInt::from(height) * &e2;
            let lae4 = &la * &e4;
            let lbe6 = &lb * &e6;
            let mut found = Vec::new();
            let mut m = -bound.clone();
            while m <= bound {
                if !m.gcd(&e).is_one() {
                    m += 1;
                    continue;
                }
                let n = &l * &m * &m * &m + &lae4 * &m + &lbe6;
                if !n.is_negative() {
                    let nl = &n * &l;
                    let r = nl.sqrt();
                    if &r * &r == nl {
                        let x = Rational::new(m.clone(), e2.clone());
                        let y = Rational::new(r, &l * &e3);
                        if y.is_zero() {
                            found.push(ECPoint::affine(x, y));
                        } else {
                            found.push(ECPoint::affine(x.clone(), -&y));
                            found.push(ECPoint::affine(x, y));
                        }
                    }
                }
                m += 1;
            }
            found
        })
        .collect();
    points.sort();
    points.dedup();
    points
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankVerdict {
    /// No multiple `kP` with `1 <= k <= 12` is the identity.
    PositiveRank,
    /// `order P = O`; the point is torsion and proves nothing about rank.
    Unknown { order: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub witness: ECPoint,
    pub multiples_checked: i64,
    pub verdict: RankVerdict,
}

impl RankCertificate {
    pub fn is_positive(&self) -> bool {
        self.verdict == RankVerdict::PositiveRank
    }
}

pub fn certify_nontorsion(c: &WeierstrassCurve, p: &ECPoint) -> Result<RankCertificate> {
    if !c.contains(p) {
        return Err(Error::OffCurve);
    }
    if p.is_infinity() {
        return Err(Error::Precondition("witness must be an affine point".into()));
    }
    let mut acc = p.clone();
    for k in 1..=MAZUR_BOUND {
        if acc.is_infinity() {
            return Ok(RankCertificate {
                witness: p.clone(),
                multiples_checked: k,
                verdict: RankVerdict::Unknown { order: k },
            });
        }
        acc = c.add(&acc, p)?;
    }
    Ok(RankCertificate { witness: p.clone(), multiples_checked: MAZUR_BOUND, verdict: RankVerdict::PositiveRank })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NagellLutz {
    /// Integral with `y = 0` or `y^2 | 4a^3 + 27b^2`: consistent with torsion.
    Consistent,
    /// Violates the torsion conditions, so the point has infinite order.
    Violated,
    /// The model is not integral.
    NotApplicable,
}

/// Necessary conditions for a rational point on an integral model to be
/// torsion.
pub fn nagell_lutz_screen(c: &WeierstrassCurve, p: &ECPoint) -> NagellLutz {
    if !c.is_integral() {
        return NagellLutz::NotApplicable;
    }
    let ECPoint::Affine { x, y } = p else {
        return NagellLutz::Consistent;
    };
    if !x.is_integer() || !y.is_integer() {
        return NagellLutz::Violated;
    }
    let y = y.to_integer();
    if y.is_zero() {
        return NagellLutz::Consistent;
    }
    let d = c.disc_core().to_integer();
    if d.is_multiple_of(&(&y * &y)) {
        NagellLutz::Consistent
    } else {
        NagellLutz::Violated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational::int;
    use crate::polyalg::rational::is_square_rational;

    fn pt(x: i64, y: i64) -> ECPoint {
        ECPoint::affine(int(x), int(y))
    }

    fn brute_force(c: &WeierstrassCurve, height: i64, denom: i64) -> Vec<ECPoint> {
        let mut out = Vec::new();
        for e in 1..=denom {
            for m in -height * e * e..=height * e * e {
                let x = Rational::new(m.into(), (e * e).into());
                if *x.denom() != BigInt::from(e * e) {
                    continue;
                }
                if let Some(y) = is_square_rational(&c.rhs(&x)) {
                    out.push(ECPoint::affine(x.clone(), y.clone()));
                    out.push(ECPoint::affine(x, -y));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn small_searches() {
        let c = WeierstrassCurve::from_ints(-16, 16).unwrap();
        let pts = search_points(&c, 8, 1);
        assert!(pts.contains(&pt(0, 4)) && pts.contains(&pt(0, -4)));
        let c = WeierstrassCurve::from_ints(-672, 6840).unwrap();
        assert!(search_points(&c, 32, 1).contains(&pt(22, 52)));
        let c = WeierstrassCurve::from_ints(0, 1).unwrap();
        let pts = search_points(&c, 2, 1);
        for p in [pt(-1, 0), pt(0, 1), pt(0, -1), pt(2, 3), pt(2, -3)] {
            assert!(pts.contains(&p));
        }
    }

    #[test]
    fn search_matches_brute_force() {
        for (a, b) in [(-16, 16), (0, 1), (-1, 1), (-2, 5), (3, -7)] {
            let c = WeierstrassCurve::from_ints(a, b).unwrap();
            assert_eq!(search_points(&c, 6, 3), brute_force(&c, 6, 3), "curve ({a}, {b})");
        }
    }

    #[test]
    fn rank_certificates() {
        let c = WeierstrassCurve::from_ints(-16, 16).unwrap();
        assert!(certify_nontorsion(&c, &pt(0, 4)).unwrap().is_positive());
        let c = WeierstrassCurve::from_ints(-1, 1).unwrap();
        assert!(certify_nontorsion(&c, &pt(0, 1)).unwrap().is_positive());
        let c = WeierstrassCurve::from_ints(0, 1).unwrap();
        let cert = certify_nontorsion(&c, &pt(2, 3)).unwrap();
        assert_eq!(cert.verdict, RankVerdict::Unknown { order: 6 });
        assert_eq!(certify_nontorsion(&c, &pt(1, 1)), Err(Error::OffCurve));
    }

    #[test]
    fn nagell_lutz_on_torsion() {
        let c = WeierstrassCurve::from_ints(0, 1).unwrap();
        for p in [pt(2, 3), pt(0, 1), pt(-1, 0)] {
            assert!(!certify_nontorsion(&c, &p).unwrap().is_positive());
            assert_eq!(nagell_lutz_screen(&c, &p), NagellLutz::Consistent);
        }
        let c = WeierstrassCurve::from_ints(-16, 16).unwrap();
        // 4 (0, 4) = (8, -20) and 400 does not divide 9472
        let p4 = c.mul(&pt(0, 4), 4).unwrap();
        assert_eq!(p4, pt(8, -20));
        assert_eq!(nagell_lutz_screen(&c, &p4), NagellLutz::Violated);
    }
}
