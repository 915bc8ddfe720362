//! Reduction of `y^2 = f(u)`, `deg f = 4`, to short Weierstrass form
//! through a rational point.
//!
//! The point is first moved to `u = 0` (by translation, or by reversal when
//! the point lies at infinity). A zero constant term is handled by the
//! reversal `v = 1/u`, `w = y v^2`, which leaves a cubic. A square constant
//! term `q^2` uses Connell's transformation with `(0, q)` sent to the
//! identity. In both cases the resulting long model is then shortened.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::rational::{int, is_square_rational, Rational};
use crate::polyalg::squarefree::is_squarefree;
use crate::polyalg::unipoly::UniPoly;

use super::curve::{ECPoint, LongWeierstrass, ShortTransform, WeierstrassCurve};

/// A point on the smooth model of `y^2 = f(u)`. The points at infinity
/// exist when the leading coefficient of `f` is a square; `sigma` is the
/// limit of `y / u^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuarticPoint {
    Affine { u: Rational, y: Rational },
    Infinity { sigma: Rational },
}

impl QuarticPoint {
    pub fn affine(u: Rational, y: Rational) -> Self {
        QuarticPoint::Affine { u, y }
    }
}

fn on_quartic(f: &UniPoly, p: &QuarticPoint) -> bool {
    match p {
        QuarticPoint::Affine { u, y } => y * y == f.eval(u),
        QuarticPoint::Infinity { sigma } => sigma * sigma == f.coeff(4),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum PreStep {
    /// `u -> u - shift`
    Translate(Rational),
    /// `(u, y) -> (1/u, y/u^2)`
    Reverse,
}

impl PreStep {
    fn apply(&self, p: &QuarticPoint) -> QuarticPoint {
        match (self, p) {
            (PreStep::Translate(s), QuarticPoint::Affine { u, y }) => QuarticPoint::affine(u - s, y.clone()),
            (PreStep::Translate(_), inf) => inf.clone(),
            (PreStep::Reverse, QuarticPoint::Affine { u, y }) if u.is_zero() => {
                QuarticPoint::Infinity { sigma: y.clone() }
            }
            (PreStep::Reverse, QuarticPoint::Affine { u, y }) => QuarticPoint::affine(u.recip(), y / (u * u)),
            (PreStep::Reverse, QuarticPoint::Infinity { sigma }) => QuarticPoint::affine(int(0), sigma.clone()),
        }
    }

    fn undo(&self, p: &QuarticPoint) -> QuarticPoint {
        match (self, p) {
            (PreStep::Translate(s), QuarticPoint::Affine { u, y }) => QuarticPoint::affine(u + s, y.clone()),
            (PreStep::Translate(_), inf) => inf.clone(),
            (PreStep::Reverse, _) => self.apply(p),
        }
    }

    fn transform(&self, f: &UniPoly) -> UniPoly {
        match self {
            PreStep::Translate(s) => f.compose(&UniPoly::new(vec![s.clone(), Rational::one()])),
            PreStep::Reverse => f.reversed(4),
        }
    }
}

/// `g = a u^4 + b u^3 + c u^2 + d u + e`, the quartic after the pre-steps.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Coeffs {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Core {
    /// `e = 0`: `X = d/u`, `Y = d y / u^2`.
    ZeroConstant(Coeffs),
    /// `e = q^2`, base point `(0, q)`.
    Connell(Coeffs, Rational),
}

/// Output of [`quartic_to_weierstrass`]: the short model together with the
/// transformation record in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticReduction {
    pub quartic: UniPoly,
    pub long: LongWeierstrass,
    pub curve: WeierstrassCurve,
    pre: Vec<PreStep>,
    core: Core,
    short: ShortTransform,
}

impl QuarticReduction {
    /// The point sent to the identity.
    pub fn base_point(&self) -> QuarticPoint {
        self.from_curve(&ECPoint::Infinity).expect("identity has a preimage")
    }

    pub fn to_curve(&self, p: &QuarticPoint) -> Result<ECPoint> {
        if !on_quartic(&self.quartic, p) {
            return Err(Error::OffCurve);
        }
        let mut p = p.clone();
        for step in &self.pre {
            p = step.apply(&p);
        }
        let long = match &self.core {
            Core::ZeroConstant(k) => zero_constant_forward(k, &p),
            Core::Connell(k, q) => connell_forward(k, q, &p),
        };
        debug_assert!(self.long.contains(&long));
        Ok(self.short.forward(&long))
    }

    pub fn from_curve(&self, p: &ECPoint) -> Result<QuarticPoint> {
        if !self.curve.contains(p) {
            return Err(Error::OffCurve);
        }
        let long = self.short.backward(p);
        let mut out = match &self.core {
            Core::ZeroConstant(k) => zero_constant_backward(k, &long),
            Core::Connell(k, q) => connell_backward(k, q, &self.long, &long)?,
        };
        for step in self.pre.iter().rev() {
            out = step.undo(&out);
        }
        if !on_quartic(&self.quartic, &out) {
            return Err(Error::OffCurve);
        }
        Ok(out)
    }
}

fn zero_constant_forward(k: &Coeffs, p: &QuarticPoint) -> ECPoint {
    match p {
        QuarticPoint::Affine { u, .. } if u.is_zero() => ECPoint::Infinity,
        QuarticPoint::Affine { u, y } => ECPoint::affine(&k.d / u, &k.d * y / (u * u)),
        QuarticPoint::Infinity { sigma } => ECPoint::affine(int(0), &k.d * sigma),
    }
}

fn zero_constant_backward(k: &Coeffs, p: &ECPoint) -> QuarticPoint {
    match p {
        ECPoint::Infinity => QuarticPoint::affine(int(0), int(0)),
        ECPoint::Affine { x, y } if x.is_zero() => QuarticPoint::Infinity { sigma: y / &k.d },
        ECPoint::Affine { x, y } => {
            let u = &k.d / x;
            let yq = y * &u * &u / &k.d;
            QuarticPoint::affine(u, yq)
        }
    }
}

fn connell_betas(k: &Coeffs, q: &Rational) -> (Rational, Rational) {
    let two_q = int(2) * q;
    let b1 = -&k.d / &two_q;
    let b2 = (&b1 * &b1 - &k.c) / &two_q;
    let b3 = (int(2) * &b1 * &b2 - &k.b) / &two_q;
    (&two_q * b2, int(4) * q * q * b3)
}

fn connell_forward(k: &Coeffs, q: &Rational, p: &QuarticPoint) -> ECPoint {
    let two_q = int(2) * q;
    match p {
        QuarticPoint::Infinity { sigma } => ECPoint::affine(&two_q * sigma, int(0)),
        QuarticPoint::Affine { u, y } if u.is_zero() => {
            if y == q {
                ECPoint::Infinity
            } else {
                let (x, yy) = connell_betas(k, q);
                ECPoint::affine(x, yy)
            }
        }
        QuarticPoint::Affine { u, y } => {
            let du = &k.d * u;
            let u2 = u * u;
            let x = (&two_q * (y + q) + &du) / &u2;
            let num = int(4) * q * q * (y + q) + &two_q * (&du + &k.c * &u2) - &k.d * &k.d * &u2 / &two_q;
            ECPoint::affine(x, num / (u2 * u))
        }
    }
}

fn connell_backward(k: &Coeffs, q: &Rational, long: &LongWeierstrass, p: &ECPoint) -> Result<QuarticPoint> {
    let two_q = int(2) * q;
    let ECPoint::Affine { x, y } = p else {
        return Ok(QuarticPoint::affine(int(0), q.clone()));
    };
    let (bx, by) = connell_betas(k, q);
    if *x == bx && *y == by {
        return Ok(QuarticPoint::affine(int(0), -q));
    }
    if y.is_zero() {
        let sigma = x / &two_q;
        if &sigma * &sigma == k.a {
            return Ok(QuarticPoint::Infinity { sigma });
        }
        if *x != -&long.a2 {
            return Err(Error::OffCurve);
        }
        // x = -a2 collapses the generic inverse; the preimage solves a linear
        // equation in u
        let a2 = &long.a2;
        let alpha = a2 * a2 / (int(4) * q * q) - &k.a;
        let beta = &k.b - a2 * &k.d / (int(2) * q * q);
        let u = beta / alpha;
        let v = (-a2 * &u * &u - &k.d * &u) / &two_q - q;
        return Ok(QuarticPoint::affine(u, v));
    }
    let u = (&two_q * (x + &k.c) - &k.d * &k.d / &two_q) / y;
    let v = -q + &u * (&u * x - &k.d) / &two_q;
    Ok(QuarticPoint::affine(u, v))
}

/// Converts `y^2 = f(u)` to a short Weierstrass model.
///
/// Without a supplied point, uses `u = 0` when the constant term is zero or
/// a square, and otherwise a point at infinity when the leading coefficient
/// is a square.
pub fn quartic_to_weierstrass(f: &UniPoly, point: Option<&QuarticPoint>) -> Result<QuarticReduction> {
    if f.degree() != Some(4) {
        return Err(Error::Precondition("quartic must have degree exactly 4".into()));
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let mut pre = Vec::new();
    match point {
        Some(p) => {
            if !on_quartic(f, p) {
                return Err(Error::OffCurve);
            }
            match p {
                QuarticPoint::Affine { u, .. } if !u.is_zero() => pre.push(PreStep::Translate(u.clone())),
                QuarticPoint::Affine { .. } => {}
                QuarticPoint::Infinity { .. } => pre.push(PreStep::Reverse),
            }
        }
        None => {
            let e = f.coeff(0);
            if !e.is_zero() && is_square_rational(&e).is_none() {
                if is_square_rational(&f.coeff(4)).is_none() {
                    return Err(Error::NoRationalPoint(
                        "constant term is a nonzero non-square and leading coefficient is a non-square".into(),
                    ));
                }
                pre.push(PreStep::Reverse);
            }
        }
    }
    let g = pre.iter().fold(f.clone(), |g, s| s.transform(&g));
    let k = Coeffs { a: g.coeff(4), b: g.coeff(3), c: g.coeff(2), d: g.coeff(1) };
    let e = g.coeff(0);
    let (core, long) = if e.is_zero() {
        // squarefree forces d != 0
        let long = LongWeierstrass {
            a1: int(0),
            a2: k.c.clone(),
            a3: int(0),
            a4: &k.b * &k.d,
            a6: &k.a * &k.d * &k.d,
        };
        (Core::ZeroConstant(k), long)
    } else {
        let q = match point.map(|p| pre.iter().fold(p.clone(), |p, s| s.apply(&p))) {
            Some(QuarticPoint::Affine { y, .. }) => y,
            _ => is_square_rational(&e).expect("square constant term"),
        };
        let a2 = &k.c - &k.d * &k.d / (int(4) * &q * &q);
        let a4 = int(-4) * &q * &q * &k.a;
        let long = LongWeierstrass {
            a1: &k.d / &q,
            a2: a2.clone(),
            a3: int(2) * &q * &k.b,
            a4: a4.clone(),
            a6: a2 * a4,
        };
        (Core::Connell(k, q), long)
    };
    let (curve, short) = long.to_short()?;
    Ok(QuarticReduction { quartic: f.clone(), long, curve, pre, core, short })
}

/// Rational points of `y^2 = f(u)` with integral `|u| <= bound`, plus the
/// points at infinity.
pub fn scan_quartic_points(f: &UniPoly, bound: i64) -> Vec<QuarticPoint> {
    let mut out = Vec::new();
    if let Some(s) = is_square_rational(&f.coeff(4)) {
        out.push(QuarticPoint::Infinity { sigma: s.clone() });
        if !s.is_zero() {
            out.push(QuarticPoint::Infinity { sigma: -s });
        }
    }
    for u in -bound..=bound {
        let u = int(u);
        if let Some(y) = is_square_rational(&f.eval(&u)) {
            if !y.is_zero() {
                out.push(QuarticPoint::affine(u.clone(), -&y));
            }
            out.push(QuarticPoint::affine(u, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_univariate;

    fn poly(s: &str) -> UniPoly {
        parse_univariate(s, 'x').unwrap()
    }

    fn round_trip_all(red: &QuarticReduction, bound: i64) -> usize {
        let pts = scan_quartic_points(&red.quartic, bound);
        for p in &pts {
            let e = red.to_curve(p).unwrap();
            assert!(red.curve.contains(&e), "{p:?} -> {e:?}");
            assert_eq!(&red.from_curve(&e).unwrap(), p);
        }
        pts.len()
    }

    #[test]
    fn zero_constant_term_gives_cubic() {
        let red = quartic_to_weierstrass(&poly("x^4 - x^3 + x"), None).unwrap();
        assert_eq!(red.curve, WeierstrassCurve::from_ints(-1, 1).unwrap());
        assert!(round_trip_all(&red, 20) >= 3);
        let back = red.to_curve(&QuarticPoint::affine(int(1), int(1))).unwrap();
        assert_eq!(back, ECPoint::affine(int(1), int(1)));
    }

    #[test]
    fn connell_with_point() {
        let f = poly("x^4 + 1");
        let red = quartic_to_weierstrass(&f, Some(&QuarticPoint::affine(int(0), int(1)))).unwrap();
        assert_eq!(red.curve, WeierstrassCurve::from_ints(-4, 0).unwrap());
        assert_eq!(round_trip_all(&red, 20), 4);
        assert_eq!(red.base_point(), QuarticPoint::affine(int(0), int(1)));
    }

    #[test]
    fn translated_and_reversed_points() {
        // y^2 = x^4 + 2x^3 - 3x^2 + 4x + 5 has (1, 3)
        let f = poly("x^4 + 2x^3 - 3x^2 + 4x + 5");
        let red = quartic_to_weierstrass(&f, Some(&QuarticPoint::affine(int(1), int(3)))).unwrap();
        round_trip_all(&red, 20);
        let red = quartic_to_weierstrass(&f, Some(&QuarticPoint::Infinity { sigma: int(-1) })).unwrap();
        assert_eq!(red.base_point(), QuarticPoint::Infinity { sigma: int(-1) });
        round_trip_all(&red, 20);
        // non-square constant, square leading coefficient
        let g = poly("4x^4 - 3x + 7");
        let red = quartic_to_weierstrass(&g, None).unwrap();
        round_trip_all(&red, 20);
    }

    #[test]
    fn collapsed_inverse_point() {
        // (-a2, 0) on the Connell model needs the linear-equation preimage
        let f = poly("2x^4 + x^3 + 3x^2 + 5x + 1");
        let red = quartic_to_weierstrass(&f, None).unwrap();
        let special = red.short.forward(&ECPoint::affine(-red.long.a2.clone(), int(0)));
        let p = red.from_curve(&special).unwrap();
        assert_eq!(p, QuarticPoint::affine(Rational::new(584.into(), 41.into()), p_y(&p)));
        assert_eq!(red.to_curve(&p).unwrap(), special);
    }

    fn p_y(p: &QuarticPoint) -> Rational {
        match p {
            QuarticPoint::Affine { y, .. } => y.clone(),
            _ => panic!("affine expected"),
        }
    }

    #[test]
    fn group_structure_transports() {
        let f = poly("x^4 + 2x^3 - 3x^2 + 4x + 5");
        let red = quartic_to_weierstrass(&f, Some(&QuarticPoint::affine(int(1), int(3)))).unwrap();
        let e = red.to_curve(&QuarticPoint::Infinity { sigma: int(1) }).unwrap();
        for k in -4..=4 {
            let m = red.curve.mul(&e, k).unwrap();
            let back = red.from_curve(&m).unwrap();
            assert_eq!(red.to_curve(&back).unwrap(), m);
        }
    }

    #[test]
    fn preconditions() {
        assert_eq!(quartic_to_weierstrass(&poly("x^4"), None), Err(Error::NotSquarefree));
        assert!(matches!(quartic_to_weierstrass(&poly("2x^4 + 3"), None), Err(Error::NoRationalPoint(_))));
        assert!(quartic_to_weierstrass(&poly("x^3 + 1"), None).is_err());
        assert_eq!(
            quartic_to_weierstrass(&poly("x^4 + 1"), Some(&QuarticPoint::affine(int(1), int(1)))),
            Err(Error::OffCurve)
        );
    }
}
