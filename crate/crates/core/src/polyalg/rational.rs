//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which already keeps every value
//! in lowest terms with a positive denominator. This module adds the handful
//! of number-theoretic helpers the rest of the crate needs on top of it.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n / 1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, normalized. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Returns the nonnegative rational square root of `r` when `r` is the square
/// of a rational number.
pub fn is_square_rational(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    // lowest terms: r is a square iff numerator and denominator both are
    let n = isqrt_exact(r.numer())?;
    let d = isqrt_exact(r.denom())?;
    Some(Rational::new(n, d))
}

/// Writes `r = core * root^2` with `core` an integer, stripping square
/// factors found by trial division up to `trial_bound`.
///
/// `core` is squarefree whenever the cofactor left after trial division has
/// no repeated prime above the bound; the identity `r = core * root^2` holds
/// unconditionally.
pub fn square_class(r: &Rational, trial_bound: u64) -> (BigInt, Rational) {
    if r.is_zero() {
        return (BigInt::zero(), Rational::zero());
    }
    // r = n/d = (n*d) / d^2
    let mut core = r.numer() * r.denom();
    let mut root = Rational::new(BigInt::one(), r.denom().clone());
    let negative = core.is_negative();
    core = core.abs();
    let mut p: u64 = 2;
    while p <= trial_bound {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        if p2 > core {
            break;
        }
        while (&core % &p2).is_zero() {
            core /= &p2;
            root *= big(&pb);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(s) = isqrt_exact(&core) {
        root *= big(&s);
        core = BigInt::one();
    }
    if negative {
        core = -core;
    }
    (core, root)
}

/// Trial division of `|n|` by integers up to `bound`. Returns the prime
/// powers found and the unfactored cofactor (`1` when complete; prime when
/// it is below `bound^2`).
pub fn trial_factor(n: &BigInt, bound: u64) -> (Vec<(BigInt, u32)>, BigInt) {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= bound {
        let db = BigInt::from(d);
        if &db * &db > n {
            break;
        }
        let mut e = 0;
        while (&n % &db).is_zero() {
            n /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() && BigInt::from(bound) * BigInt::from(bound) >= n {
        out.push((n, 1));
        n = BigInt::one();
    }
    (out, n)
}

/// Canonical `"num/den"` text used by reports.
pub fn to_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a"`, `"-a"`, or `"a/b"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Residue of `r` modulo the prime `p`, or `None` when `p` divides the
/// denominator.
pub fn reduce_mod(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = r.numer().mod_floor(&pb).to_u64()?;
    Some(crate::polyalg::modp::mul_mod(n, crate::polyalg::modp::inv_mod(d, p), p))
}

/// Integer residue in `[0, p)`.
pub fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn sign_of(r: &Rational) -> Sign {
    r.numer().sign()
}
