//! Polynomials over prime fields `F_p` with `p < 2^31`.

use crate::error::{Error, Result};
use crate::polyalg::rational::reduce_mod;
use crate::polyalg::unipoly::UniPoly;

pub const MODULUS_LIMIT: u64 = 1 << 31;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense polynomial over `F_p`, coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl PrimePoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Result<Self> {
        if modulus >= MODULUS_LIMIT || !is_prime(modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Self::from_residues(modulus, coeffs.into_iter().map(|c| c % modulus).collect()))
    }

    /// Caller guarantees the modulus is prime and residues are reduced.
    pub(crate) fn from_residues(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    /// Reduction of a rational polynomial; `None` when `p` divides a
    /// denominator.
    pub fn reduce(f: &UniPoly, p: u64) -> Option<Self> {
        let coeffs = f.coeffs().iter().map(|c| reduce_mod(c, p)).collect::<Option<Vec<_>>>()?;
        Some(Self::from_residues(p, coeffs))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn zero_like(&self) -> Self {
        Self::from_residues(self.modulus, Vec::new())
    }

    pub fn x(p: u64) -> Self {
        Self::from_residues(p, vec![0, 1])
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.modulus;
        self.coeffs.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::from_residues(p, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| add_mod(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0), p))
            .collect();
        Self::from_residues(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| sub_mod(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0), p))
            .collect();
        Self::from_residues(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let p = self.modulus;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::from_residues(p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        Self::from_residues(p, self.coeffs.iter().map(|&a| mul_mod(a, c % p, p)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale(inv_mod(lc, self.modulus)),
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.modulus;
        let dd = divisor.degree().expect("division by zero polynomial mod p");
        let Some(nd) = self.degree() else {
            return (self.zero_like(), self.zero_like());
        };
        if nd < dd {
            return (self.zero_like(), self.clone());
        }
        let inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = mul_mod(rem[k + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = sub_mod(rem[k + j], mul_mod(c, d, p), p);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_residues(p, quot), Self::from_residues(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::from_residues(self.modulus, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).degree() == Some(0)
            }
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree_factors(&self) -> Vec<(usize, PrimePoly)> {
        let p = self.modulus;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while let Some(deg) = f.degree() {
            if deg == 0 {
                break;
            }
            d += 1;
            if 2 * d > deg {
                out.push((deg, f.clone()));
                break;
            }
            h = h.pow_mod(p, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree().unwrap_or(0) > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        out
    }

    /// Degree multiset of the irreducible factors, as sorted `(degree, count)`
    /// pairs. Requires a squarefree nonconstant polynomial.
    pub fn factor_degrees(&self) -> Vec<(usize, usize)> {
        self.distinct_degree_factors()
            .into_iter()
            .map(|(d, g)| (d, g.degree().unwrap_or(0) / d))
            .collect()
    }

    /// Roots in `F_p` by exhaustive evaluation; intended for small `p`.
    pub fn roots_exhaustive(&self) -> Vec<u64> {
        (0..self.modulus).filter(|&r| self.eval(r) == 0).collect()
    }
}

/// Resultant over `F_p` by the Euclidean remainder sequence. Both inputs
/// must be nonzero; degrees are the actual degrees.
pub fn resultant_mod_p(a: &PrimePoly, b: &PrimePoly) -> u64 {
    let p = a.modulus;
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = 1u64;
    loop {
        let da = a.degree().expect("nonzero input");
        let db = b.degree().expect("nonzero input");
        if db == 0 {
            return mul_mod(acc, pow_mod(b.coeffs[0], da as u64, p), p);
        }
        if da == 0 {
            return mul_mod(acc, pow_mod(a.coeffs[0], db as u64, p), p);
        }
        let r = a.rem(&b);
        let Some(dr) = r.degree() else {
            return 0;
        };
        if da % 2 == 1 && db % 2 == 1 {
            acc = sub_mod(0, acc, p);
        }
        acc = mul_mod(acc, pow_mod(b.coeffs[db], (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
}

/// Newton interpolation over `F_p` through `(xs[i], ys[i])` with distinct
/// nodes; returns ascending coefficients of degree `< xs.len()`.
pub fn interpolate_mod_p(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut dd: Vec<u64> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = sub_mod(dd[i], dd[i - 1], p);
            let den = sub_mod(xs[i], xs[i - level], p);
            dd[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    // expand the Newton form
    let mut coeffs = vec![0u64; n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![0u64; n];
        for i in 0..n {
            if coeffs[i] == 0 {
                continue;
            }
            if i + 1 < n {
                next[i + 1] = add_mod(next[i + 1], coeffs[i], p);
            }
            next[i] = sub_mod(next[i], mul_mod(coeffs[i], xs[k], p), p);
        }
        next[0] = add_mod(next[0], dd[k], p);
        coeffs = next;
    }
    coeffs
}

/// Degree multiset of `f` modulo `p` as `(degree, count)` pairs, ascending.
///
/// Fails with [`Error::BadPrime`] when `p` divides the leading coefficient or
/// a denominator, or when the reduction is not squarefree.
pub fn factor_mod_p(f: &UniPoly, p: u64) -> Result<Vec<(usize, usize)>> {
    if p >= MODULUS_LIMIT || !is_prime(p) {
        return Err(Error::InvalidModulus(p));
    }
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::Precondition("factor_mod_p needs a nonconstant polynomial".into()));
    }
    let bad = |reason: &str| Error::BadPrime { prime: p, reason: reason.to_string() };
    let r = PrimePoly::reduce(f, p).ok_or_else(|| bad("divides a denominator"))?;
    if r.degree() != Some(deg) {
        return Err(bad("divides the leading coefficient"));
    }
    if !r.is_squarefree() {
        return Err(bad("reduction is not squarefree"));
    }
    Ok(r.factor_degrees())
}

/// Total degree covered by a degree multiset.
pub fn pattern_degree(pattern: &[(usize, usize)]) -> usize {
    pattern.iter().map(|(d, c)| d * c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> UniPoly {
        UniPoly::from_ints(&[16, -16, 0, 1])
    }

    #[test]
    fn cubic_mod_5_and_7() {
        // root x = 3 mod 5: 27 - 48 + 16 = -5
        assert_eq!(factor_mod_p(&cubic(), 5).unwrap(), vec![(1, 1), (2, 1)]);
        assert_eq!(factor_mod_p(&cubic(), 7).unwrap(), vec![(3, 1)]);
    }

    #[test]
    fn exhaustive_root_oracle_agrees() {
        let r5 = PrimePoly::reduce(&cubic(), 5).unwrap();
        assert_eq!(r5.roots_exhaustive(), vec![3]);
        // cofactor x^2 + 3x + 3 has discriminant 9 - 12 = -3 = 2 mod 5, a non-residue
        let (q, rem) = r5.div_rem(&PrimePoly::new(5, vec![2, 1]).unwrap());
        assert!(rem.is_zero());
        assert_eq!(q.coeffs(), &[3, 3, 1]);
        assert!((0..5).all(|t| t * t % 5 != 2));
        assert!(PrimePoly::reduce(&cubic(), 7).unwrap().roots_exhaustive().is_empty());
    }

    #[test]
    fn sum_of_squares_splits_mod_5() {
        assert_eq!(factor_mod_p(&UniPoly::from_ints(&[1, 0, 1]), 5).unwrap(), vec![(1, 2)]);
        assert_eq!(factor_mod_p(&UniPoly::from_ints(&[1, 0, 1]), 3).unwrap(), vec![(2, 1)]);
    }

    #[test]
    fn bad_primes_are_rejected() {
        // x^2 + 1 = (x + 1)^2 mod 2
        assert!(matches!(
            factor_mod_p(&UniPoly::from_ints(&[1, 0, 1]), 2),
            Err(Error::BadPrime { .. })
        ));
        assert!(matches!(factor_mod_p(&UniPoly::from_ints(&[1, 0, 5]), 5), Err(Error::BadPrime { .. })));
        assert!(matches!(factor_mod_p(&cubic(), 9), Err(Error::InvalidModulus(9))));
        assert!(PrimePoly::new(15, vec![1]).is_err());
    }

    #[test]
    fn modular_resultant_and_interpolation() {
        let a = PrimePoly::new(101, vec![1, 0, 1]).unwrap();
        let b = PrimePoly::new(101, vec![100, 0, 1]).unwrap();
        assert_eq!(resultant_mod_p(&a, &b), 4);
        let xs = [0, 1, 2, 3];
        let f = PrimePoly::new(101, vec![5, 0, 7, 1]).unwrap();
        let ys: Vec<u64> = xs.iter().map(|&x| f.eval(x)).collect();
        assert_eq!(interpolate_mod_p(&xs, &ys, 101), vec![5, 0, 7, 1]);
    }

    #[test]
    fn degree_one_and_irreducible_pieces() {
        // x^4 - 1 mod 13 splits completely; mod 7 it is (x-1)(x+1)(x^2+1)
        let f = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        assert_eq!(factor_mod_p(&f, 13).unwrap(), vec![(1, 4)]);
        assert_eq!(factor_mod_p(&f, 7).unwrap(), vec![(1, 2), (2, 1)]);
    }
}
