use num_traits::Zero;

use crate::error::{Error, Result};
use crate::galois::{certify, collect_cycle_types, Claim, GaloisCertificate};
use crate::polyalg::bipoly::{resultant_main_modular, BiPoly};
use crate::polyalg::modp::PrimePoly;
use crate::polyalg::primes::large_primes;
use crate::polyalg::rational::{int, Rational};
use crate::polyalg::squarefree::squarefree_decompose;
use crate::polyalg::unipoly::{gcd_poly, UniPoly};

use super::form::{hessian, TernaryForm, TernaryQuartic};

/// Number of flexes of a smooth plane quartic, with multiplicity.
pub const FLEX_COUNT: usize = 24;
/// Shears tried for `s = 1..=MAX_SHEAR`: `keep -> keep + other` and
/// `z -> z + s * other + keep`, which moves the projection centre to
/// `(other, keep, z) = (1, 1, s)`.
pub const MAX_SHEAR: i64 = 10;

/// The affine coordinate whose flex values are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinate {
    X,
    Y,
}

impl Coordinate {
    fn indices(self) -> (usize, usize) {
        match self {
            Coordinate::X => (0, 1),
            Coordinate::Y => (1, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexPolynomial {
    /// Primitive integral squarefree part of the resultant.
    pub polynomial: UniPoly,
    /// `Res(F, H)` in the chosen chart.
    pub resultant: UniPoly,
    /// Shear parameter used (`0` for the original coordinates).
    pub shear: i64,
    /// `(multiplicity, total degree of factors with that multiplicity)`.
    pub multiplicities: Vec<(u32, usize)>,
    pub squarefree: bool,
}

fn shear_matrix(other: usize, s: i64) -> [[Rational; 3]; 3] {
    let mut m: [[Rational; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { int(1) } else { int(0) }));
    if s != 0 {
        let keep = 1 - other;
        m[keep][other] = int(1);
        m[2][other] = int(s);
        m[2][keep] = int(1);
    }
    m
}

fn primitive(f: &UniPoly) -> UniPoly {
    let (_, ints) = f.primitive_integer();
    let p = UniPoly::from_bigints(&ints);
    if p.leading().is_some_and(|c| c < &Rational::zero()) {
        -p
    } else {
        p
    }
}

/// Squarefreeness through one good large prime, falling back to Yun.
fn is_squarefree_fast(f: &UniPoly) -> bool {
    let deg = f.degree();
    for p in large_primes().take(3) {
        if let Some(r) = PrimePoly::reduce(f, p) {
            if r.degree() == deg && r.is_squarefree() {
                return true;
            }
        }
    }
    crate::polyalg::squarefree::is_squarefree(f)
}

fn gcd_all(polys: &[UniPoly]) -> UniPoly {
    polys.iter().fold(UniPoly::zero(), |g, p| if g.is_zero() { p.monic() } else if p.is_zero() { g } else { gcd_poly(&g, p) })
}

/// Proves that `g` has no singular point, in the chart `z = 1` by
/// resultants of the partials and on the line `z = 0` directly. A `false`
/// answer is inconclusive.
fn smooth_in_coordinates(g: &TernaryForm, keep: usize, other: usize) -> bool {
    let partials: Vec<TernaryForm> = (0..3).map(|i| g.derivative(i)).collect();
    if partials.iter().any(TernaryForm::is_zero) {
        return false;
    }
    let affine: Vec<BiPoly> = partials.iter().map(|p| p.dehomogenize(keep, other)).collect();
    let mut res = Vec::new();
    for (a, b) in [(0, 1), (0, 2)] {
        match resultant_main_modular(&affine[a], &affine[b]) {
            Ok(r) if !r.is_zero() => res.push(r),
            _ => return false,
        }
    }
    if !gcd_all(&res).is_constant() {
        return false;
    }
    // z = 0: points [t : 1 : 0] in (other, keep) order, and [1 : 0 : 0]
    let mut at_infinity = Vec::new();
    for p in &partials {
        let coeffs: Vec<Rational> = (0..=3u32)
            .map(|k| {
                let mut e = [0u32; 3];
                e[other] = k;
                e[keep] = 3 - k;
                p.coeff(e)
            })
            .collect();
        at_infinity.push(UniPoly::new(coeffs));
    }
    if !gcd_all(&at_infinity).is_constant() {
        return false;
    }
    let mut pt = [int(0), int(0), int(0)];
    pt[other] = int(1);
    partials.iter().any(|p| !p.eval(&pt).is_zero())
}

/// Decides smoothness, trying the shear sequence when the resultant test is
/// inconclusive. Singular curves give [`Error::SingularCurve`].
pub fn check_smooth(f: &TernaryQuartic) -> Result<i64> {
    let (keep, other) = Coordinate::Y.indices();
    for s in 0..=MAX_SHEAR {
        let g = f.form().linear_substitute(&shear_matrix(other, s));
        if smooth_in_coordinates(&g, keep, other) {
            return Ok(s);
        }
    }
    Err(Error::SingularCurve)
}

fn attempt(f: &TernaryQuartic, coord: Coordinate, s: i64) -> Result<Option<FlexPolynomial>> {
    let (keep, other) = coord.indices();
    let g = if s == 0 { f.form().clone() } else { f.form().linear_substitute(&shear_matrix(other, s)) };
    let h = hessian(&g);
    if h.is_zero() {
        return Ok(None);
    }
    let a = g.dehomogenize(keep, other);
    let b = h.dehomogenize(keep, other);
    if !a.leading_main().is_some_and(UniPoly::is_constant) {
        return Ok(None);
    }
    let r = resultant_main_modular(&a, &b)?;
    if r.degree() != Some(FLEX_COUNT) {
        return Ok(None);
    }
    let r = primitive(&r);
    if is_squarefree_fast(&r) {
        return Ok(Some(FlexPolynomial {
            polynomial: r.clone(),
            resultant: r,
            shear: s,
            multiplicities: vec![(1, FLEX_COUNT)],
            squarefree: true,
        }));
    }
    let dec = squarefree_decompose(&r)?;
    let multiplicities = dec.parts.iter().map(|(p, m)| (*m, p.degree_or_zero())).collect();
    Ok(Some(FlexPolynomial {
        polynomial: primitive(&dec.radical()),
        resultant: r,
        shear: s,
        multiplicities,
        squarefree: false,
    }))
}

/// Eliminates the other affine coordinate from `F = H = 0` and returns the
/// polynomial of flex coordinates.
///
/// The first shear (starting from the identity) giving a resultant of degree
/// 24 with constant leading coefficient in the eliminated variable is a
/// candidate; the first squarefree candidate wins. A curve whose flexes have
/// multiplicity never yields a squarefree candidate, and the first candidate
/// is returned with its multiplicity structure.
pub fn flex_polynomial(f: &TernaryQuartic, coord: Coordinate) -> Result<FlexPolynomial> {
    check_smooth(f)?;
    flex_polynomial_from(f, coord, 0)
}

/// As [`flex_polynomial`], with shears starting at `start`.
pub fn flex_polynomial_from(f: &TernaryQuartic, coord: Coordinate, start: i64) -> Result<FlexPolynomial> {
    let mut fallback = None;
    for s in start..=start + MAX_SHEAR {
        match attempt(f, coord, s)? {
            Some(fp) if fp.squarefree => return Ok(fp),
            Some(fp) if fallback.is_none() => fallback = Some(fp),
            _ => {}
        }
    }
    fallback.ok_or_else(|| {
        Error::DegenerateElimination(format!("no shear in {start}..={} gives a degree-24 flex resultant", start + MAX_SHEAR))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlexVerdict {
    /// Finitely many cyclic cubic points, under the listed assumptions.
    Finite { assumptions: Vec<String> },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexReport {
    pub flex: FlexPolynomial,
    pub certificate: GaloisCertificate,
    pub verdict: FlexVerdict,
}

/// Certifies the Galois action on the flexes, which are the Weierstrass
/// points of a smooth plane quartic.
pub fn flex_galois_report(f: &TernaryQuartic, budget: usize) -> Result<FlexReport> {
    let flex = flex_polynomial(f, Coordinate::Y)?;
    report_for(flex, budget)
}

pub fn report_for(flex: FlexPolynomial, budget: usize) -> Result<FlexReport> {
    let certificate = certify(&collect_cycle_types(&flex.polynomial, budget)?)?;
    let verdict = if !flex.squarefree {
        FlexVerdict::Inconclusive {
            reason: format!("flexes with multiplicity: {:?}", flex.multiplicities),
        }
    } else if certificate.has(Claim::TwoTransitive) {
        FlexVerdict::Finite {
            assumptions: vec![
                "Galois action on the 24 flexes is 2-transitive: certified".into(),
                "Jacobian contains no elliptic curve: unverified, supplied externally".into(),
                "Bombieri-Lang conjecture for genus 3: assumed".into(),
            ],
        }
    } else {
        FlexVerdict::Inconclusive { reason: "2-transitivity not certified within the prime budget".into() }
    };
    Ok(FlexReport { flex, certificate, verdict })
}
