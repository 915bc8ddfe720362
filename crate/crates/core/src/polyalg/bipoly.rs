//! Polynomials in two variables, stored as a polynomial in a *main* variable
//! whose coefficients are [`UniPoly`] in a *secondary* variable.
//!
//! For curve models `y^3 + p(x) y + q(x)` the main variable is `y`; for the
//! flex elimination it is the variable being eliminated.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::modp::{interpolate_mod_p, resultant_mod_p, PrimePoly};
use crate::polyalg::primes::large_primes;
use crate::polyalg::rational::{bigint_mod, denominator_lcm, int, Rational};
use crate::polyalg::resultant::resultant;
use crate::polyalg::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    /// `coeffs[j]` multiplies `main^j`.
    coeffs: Vec<UniPoly>,
}

impl std::fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiPoly({})", crate::parser::render_bipoly(self, 'x', 'y'))
    }
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Polynomial free of the main variable.
    pub fn from_secondary(c: UniPoly) -> Self {
        Self::new(vec![c])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_secondary(UniPoly::constant(c))
    }

    /// The main variable itself.
    pub fn main_var() -> Self {
        Self::new(vec![UniPoly::zero(), UniPoly::one()])
    }

    /// The secondary variable itself.
    pub fn secondary_var() -> Self {
        Self::from_secondary(UniPoly::x())
    }

    /// `c * secondary^i * main^j`.
    pub fn monomial(c: Rational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); j + 1];
        coeffs[j] = UniPoly::monomial(c, i);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_main(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_secondary(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.degree().map(|d| d + j))
            .max()
    }

    pub fn leading_main(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    /// Iterates over nonzero terms as `(secondary exponent, main exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coeffs.iter().enumerate().flat_map(|(j, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v))
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut acc = Self::zero();
        for (i, j, c) in terms {
            acc = &acc + &Self::monomial(c, i, j);
        }
        acc
    }

    /// Exchanges the roles of the two variables.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.terms().map(|(i, j, c)| (j, i, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_secondary(&self, c: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a value for the main variable.
    pub fn eval_main(&self, y: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(y) + c;
        }
        acc
    }

    /// Substitutes a value for the secondary variable, giving a polynomial in
    /// the main variable.
    pub fn eval_secondary(&self, x: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_secondary(x).eval(y)
    }

    pub fn derivative_main(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&int(j as i64)))
                .collect(),
        )
    }

    pub fn derivative_secondary(&self) -> Self {
        Self::new(self.coeffs.iter().map(UniPoly::derivative).collect())
    }

    /// `self(secondary := s, main := m)`.
    pub fn substitute(&self, s: &BiPoly, m: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero();
        for c in self.coeffs.iter().rev() {
            let mut inner = BiPoly::zero();
            for a in c.coeffs().iter().rev() {
                inner = &(&inner * s) + &BiPoly::constant(a.clone());
            }
            acc = &(&acc * m) + &inner;
        }
        acc
    }

    /// Remainder modulo a relation that is monic in the main variable.
    pub fn reduce_monic(&self, relation: &BiPoly) -> BiPoly {
        let n = relation.degree_main().expect("nonzero relation");
        assert!(relation.coeffs[n].is_one(), "relation must be monic in the main variable");
        let mut c = self.coeffs.clone();
        while c.len() > n {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - n;
            for (j, r) in relation.coeffs[..n].iter().enumerate() {
                c[shift + j] = &c[shift + j] - &(&top * r);
            }
        }
        BiPoly::new(c)
    }

    /// Integer multiple: `self = scale * ints` with every coefficient of
    /// `ints` integral and primitive.
    pub fn clear_denominators(&self) -> (Rational, BiPoly) {
        if self.is_zero() {
            return (Rational::one(), BiPoly::zero());
        }
        let l = denominator_lcm(self.terms().map(|(_, _, c)| c));
        let g = self
            .terms()
            .map(|(_, _, c)| (c * Rational::from_integer(l.clone())).to_integer())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
        let factor = Rational::new(l, g);
        (factor.recip(), self.scale(&factor))
    }

    fn is_integral(&self) -> bool {
        self.coeffs.iter().all(UniPoly::is_integral)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Upper bound on the degree (in the secondary variable) of the resultant
/// eliminating the main variable.
fn resultant_degree_bound(a: &BiPoly, b: &BiPoly) -> usize {
    let m = a.degree_main().unwrap_or(0);
    let n = b.degree_main().unwrap_or(0);
    m * b.degree_secondary().unwrap_or(0) + n * a.degree_secondary().unwrap_or(0)
}

fn check_resultant_inputs(a: &BiPoly, b: &BiPoly) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// Resultant with respect to the main variable, by exact evaluation at
/// integer points of the secondary variable and Newton interpolation over
/// the rationals.
pub fn resultant_main_exact(a: &BiPoly, b: &BiPoly) -> Result<UniPoly> {
    check_resultant_inputs(a, b)?;
    let bound = resultant_degree_bound(a, b);
    let la = a.leading_main().unwrap();
    let lb = b.leading_main().unwrap();
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut t: i64 = 0;
    while xs.len() <= bound {
        let x = int(t);
        t = if t >= 0 { -t - 1 } else { -t };
        if la.eval(&x).is_zero() || lb.eval(&x).is_zero() {
            continue;
        }
        ys.push(resultant(&a.eval_secondary(&x), &b.eval_secondary(&x))?);
        xs.push(x);
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton interpolation over the rationals.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = UniPoly::zero();
    for k in (0..n).rev() {
        let lin = UniPoly::new(vec![-xs[k].clone(), Rational::one()]);
        acc = &(&acc * &lin) + &UniPoly::constant(dd[k].clone());
    }
    acc
}

/// Resultant with respect to the main variable by multi-modular
/// evaluation-interpolation and Chinese remaindering, stopping once the
/// product of primes exceeds twice a Hadamard bound on the coefficients.
pub fn resultant_main_modular(a: &BiPoly, b: &BiPoly) -> Result<UniPoly> {
    check_resultant_inputs(a, b)?;
    let (sa, ia) = a.clear_denominators();
    let (sb, ib) = b.clear_denominators();
    debug_assert!(ia.is_integral() && ib.is_integral());
    let m = ia.degree_main().unwrap();
    let n = ib.degree_main().unwrap();
    // Res(sa A, sb B) = sa^n sb^m Res(A, B)
    let scale = num_traits::pow(sa, n) * num_traits::pow(sb, m);
    if m == 0 && n == 0 {
        return Ok(UniPoly::one());
    }
    let bound_sq = hadamard_bound_squared(&ia, n) * hadamard_bound_squared(&ib, m);
    let degree_bound = resultant_degree_bound(&ia, &ib);

    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); degree_bound + 1];
    for p in large_primes() {
        let Some(vals) = modular_image(&ia, &ib, p, degree_bound) else {
            continue;
        };
        // CRT: combine residues (mod modulus) with vals (mod p)
        let pb = BigInt::from(p);
        let inv = mod_inverse(&modulus, &pb);
        for (r, &v) in residues.iter_mut().zip(vals.iter()) {
            let diff = (BigInt::from(v) - &*r).mod_floor(&pb);
            let k = (diff * &inv).mod_floor(&pb);
            *r += k * &modulus;
        }
        modulus *= &pb;
        if &modulus * &modulus > BigInt::from(4) * &bound_sq {
            break;
        }
    }
    let half = &modulus / 2;
    let coeffs: Vec<Rational> = residues
        .into_iter()
        .map(|r| {
            let r = if r > half { r - &modulus } else { r };
            Rational::from_integer(r)
        })
        .collect();
    Ok(UniPoly::new(coeffs).scale(&scale))
}

/// `(sum_j ||c_j||_1^2)^rows`, a squared Hadamard bound contribution for the
/// `rows` Sylvester rows built from `f`.
fn hadamard_bound_squared(f: &BiPoly, rows: usize) -> BigInt {
    let row: BigInt = f
        .coeffs
        .iter()
        .map(|c| {
            let l1: BigInt = c.coeffs().iter().map(|v| v.numer().abs()).sum();
            &l1 * &l1
        })
        .sum();
    num_traits::pow(row, rows)
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    e.x.mod_floor(p)
}

/// Coefficients of the resultant modulo `p`, or `None` if `p` is unlucky
/// (drops a main-variable degree identically).
fn modular_image(a: &BiPoly, b: &BiPoly, p: u64, degree_bound: usize) -> Option<Vec<u64>> {
    let red = |f: &BiPoly| -> Vec<PrimePoly> {
        f.coeffs
            .iter()
            .map(|c| PrimePoly::from_residues(p, c.coeffs().iter().map(|v| bigint_mod(v.numer(), p)).collect()))
            .collect()
    };
    let ra = red(a);
    let rb = red(b);
    if ra.last().unwrap().is_zero() || rb.last().unwrap().is_zero() {
        return None;
    }
    let mut xs = Vec::with_capacity(degree_bound + 1);
    let mut ys = Vec::with_capacity(degree_bound + 1);
    let mut t = 0u64;
    while xs.len() <= degree_bound {
        if t >= p {
            return None;
        }
        let specialize = |r: &[PrimePoly]| PrimePoly::from_residues(p, r.iter().map(|c| c.eval(t)).collect());
        let ea = specialize(&ra);
        let eb = specialize(&rb);
        if ea.degree() == Some(ra.len() - 1) && eb.degree() == Some(rb.len() - 1) {
            xs.push(t);
            ys.push(resultant_mod_p(&ea, &eb));
        }
        t += 1;
    }
    Some(interpolate_mod_p(&xs, &ys, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::resultant::cubic_discriminant;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn cubic_resultant_matches_discriminant() {
        // Res_y(y^3 + p y + q, 3y^2 + p) = -disc
        let p = up(&[1, 2, 0, -1]);
        let q = up(&[0, 3, 1]);
        let f = BiPoly::new(vec![q.clone(), p.clone(), UniPoly::zero(), UniPoly::one()]);
        let df = f.derivative_main();
        let exact = resultant_main_exact(&f, &df).unwrap();
        let modular = resultant_main_modular(&f, &df).unwrap();
        assert_eq!(exact, -cubic_discriminant(&p, &q));
        assert_eq!(modular, exact);
    }

    #[test]
    fn reduction_modulo_monic_relation() {
        // y^3 = -x y - 1 on y^3 + x y + 1
        let rel = BiPoly::new(vec![up(&[1]), up(&[0, 1]), UniPoly::zero(), up(&[1])]);
        let y3 = BiPoly::main_var().pow(3);
        let r = y3.reduce_monic(&rel);
        assert_eq!(r, BiPoly::new(vec![up(&[-1]), up(&[0, -1])]));
        assert!(rel.reduce_monic(&rel).is_zero());
    }

    #[test]
    fn swap_and_substitute() {
        let f = BiPoly::from_terms([(2, 1, int(3)), (0, 0, int(1))]); // 3 x^2 y + 1
        let g = f.swap();
        assert_eq!(g.eval(&int(2), &int(5)), f.eval(&int(5), &int(2)));
        // substitute x := x + y, y := x
        let s = &BiPoly::secondary_var() + &BiPoly::main_var();
        let h = f.substitute(&s, &BiPoly::secondary_var());
        assert_eq!(h.eval(&int(1), &int(2)), f.eval(&int(3), &int(1)));
    }

    #[test]
    fn rational_inputs_through_modular_route() {
        let half = Rational::new(1.into(), 2.into());
        let a = BiPoly::new(vec![UniPoly::new(vec![half.clone(), int(1)]), up(&[0, 0, 1]), up(&[3])]);
        let b = BiPoly::new(vec![up(&[-1, 0, 2]), UniPoly::new(vec![int(0), half])]);
        assert_eq!(resultant_main_modular(&a, &b).unwrap(), resultant_main_exact(&a, &b).unwrap());
    }
}
