//! Local solvability of `w^2 = c X^2 + k` through Hilbert symbols. By
//! Hasse-Minkowski the conic has a rational point iff `(c, k)_v = 1` at
//! every place `v`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::polyalg::rational::{square_class, trial_factor, Rational};

const FACTOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalVerdict {
    /// Soluble at every place; a rational point exists.
    Soluble,
    /// Insoluble at the named place (`"real"` or a prime).
    Insoluble { place: String },
    /// Coefficients could not be factored within the trial bound.
    Undecided,
}

fn split_valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut n = n.clone();
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Legendre symbol `(u / p)` for odd prime `p` not dividing `u`.
fn legendre(u: &BigInt, p: &BigInt) -> i32 {
    let e = (p - 1u32) / 2u32;
    let r = u.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

fn mod8(n: &BigInt) -> u32 {
    n.mod_floor(&BigInt::from(8)).to_u32().unwrap()
}

/// Hilbert symbol `(a, b)_p` of nonzero integers at a finite prime.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    if *p == BigInt::from(2) {
        let eps = |x: &BigInt| ((mod8(x) - 1) / 2) % 2;
        let omega = |x: &BigInt| {
            let r = mod8(x);
            u32::from(r == 3 || r == 5)
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let eps_p = ((p - 1u32) / 2u32).is_odd();
    let mut s = if eps_p && alpha % 2 == 1 && beta % 2 == 1 { -1 } else { 1 };
    if beta % 2 == 1 {
        s *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&v, p);
    }
    s
}

/// Decides local solvability of `w^2 = c X^2 + k`, `c, k != 0`.
pub fn conic_local_screen(c: &Rational, k: &Rational) -> LocalVerdict {
    let (a, _) = square_class(c, FACTOR_BOUND);
    let (b, _) = square_class(k, FACTOR_BOUND);
    if a.is_negative() && b.is_negative() {
        return LocalVerdict::Insoluble { place: "real".into() };
    }
    let mut primes: Vec<BigInt> = vec![BigInt::from(2)];
    for n in [&a, &b] {
        let (fs, rest) = trial_factor(n, FACTOR_BOUND);
        if !rest.is_one() {
            return LocalVerdict::Undecided;
        }
        primes.extend(fs.into_iter().map(|(p, _)| p));
    }
    primes.sort();
    primes.dedup();
    for p in primes {
        if hilbert_symbol(&a, &b, &p) == -1 {
            return LocalVerdict::Insoluble { place: p.to_string() };
        }
    }
    debug_assert!(!a.is_zero() && !b.is_zero());
    LocalVerdict::Soluble
}
