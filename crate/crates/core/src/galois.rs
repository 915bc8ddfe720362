//! One-sided Galois group certificates from Frobenius cycle types.
//!
//! By Dedekind's theorem the degree pattern of `f mod p`, at a prime of good
//! reduction, is the cycle type of a Frobenius element of the Galois group
//! acting on the roots. The rules applied by [`certify`]:
//!
//! * A group containing an `n`-cycle is transitive. So is a group for which
//!   the subset sums of the recorded patterns share no value strictly
//!   between `0` and `n` (any rational factor of degree `d` would make `d` a
//!   subset sum at every good prime).
//! * A transitive group containing a permutation of type `(1, n-1)` is
//!   2-transitive: the stabiliser of the fixed point is transitive on the
//!   remaining `n - 1` points.
//! * Jordan: a primitive group (2-transitive groups are primitive) that
//!   contains a `p`-cycle with `p` prime and `p <= n - 3` contains `A_n`. A
//!   pattern with exactly one part divisible by `p`, that part equal to `p`,
//!   has a power that is a `p`-cycle.
//! * The group lies in `A_n` exactly when the discriminant is a square; an
//!   odd cycle type, or an exact non-square discriminant, places it outside.
//!
//! Absent claims are never evidence against the corresponding property.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyalg::modp::factor_mod_p;
use crate::polyalg::primes::{primes_from, SWEEP_PRIME_START};
use crate::polyalg::rational::is_square_rational;
use crate::polyalg::resultant::discriminant;
use crate::polyalg::squarefree::is_squarefree;
use crate::polyalg::unipoly::UniPoly;

pub const DEFAULT_PRIME_BUDGET: usize = 200;

/// Frobenius cycle type at one good prime, parts ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub prime: u64,
    pub parts: Vec<usize>,
}

impl CycleType {
    /// Sign `(-1)^(n - #parts)` is `-1`.
    pub fn is_odd(&self) -> bool {
        let n: usize = self.parts.iter().sum();
        (n - self.parts.len()) % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeEvidence {
    pub polynomial: UniPoly,
    pub types: Vec<CycleType>,
    pub skipped: Vec<(u64, String)>,
}

impl CycleTypeEvidence {
    pub fn degree(&self) -> usize {
        self.polynomial.degree_or_zero()
    }

    /// Evidence restricted to the first `k` swept primes.
    pub fn prefix(&self, k: usize) -> CycleTypeEvidence {
        let cut = |p: u64| primes_from(SWEEP_PRIME_START).take(k).any(|q| q == p);
        CycleTypeEvidence {
            polynomial: self.polynomial.clone(),
            types: self.types.iter().filter(|t| cut(t.prime)).cloned().collect(),
            skipped: self.skipped.iter().filter(|s| cut(s.0)).cloned().collect(),
        }
    }
}

fn expand(pattern: &[(usize, usize)]) -> Vec<usize> {
    pattern.iter().flat_map(|&(d, c)| std::iter::repeat_n(d, c)).collect()
}

/// Factors `f` modulo the first `budget` primes from 2, in parallel, and
/// records the patterns in prime order.
pub fn collect_cycle_types(f: &UniPoly, budget: usize) -> Result<CycleTypeEvidence> {
    if f.degree_or_zero() < 2 {
        return Err(Error::Precondition("cycle types need degree at least 2".into()));
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let primes: Vec<u64> = primes_from(SWEEP_PRIME_START).take(budget).collect();
    let results: Vec<_> = primes.par_iter().map(|&p| (p, factor_mod_p(f, p))).collect();
    let mut types = Vec::new();
    let mut skipped = Vec::new();
    for (prime, r) in results {
        match r {
            Ok(pattern) => types.push(CycleType { prime, parts: expand(&pattern) }),
            Err(Error::BadPrime { reason, .. }) => skipped.push((prime, reason)),
            Err(e) => return Err(e),
        }
    }
    Ok(CycleTypeEvidence { polynomial: f.clone(), types, skipped })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Transitive,
    TwoTransitive,
    ContainsAlternating,
    FullSymmetric,
    CubicCyclic,
    CubicNonabelian,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Transitive => "transitive",
            Claim::TwoTransitive => "two-transitive",
            Claim::ContainsAlternating => "contains-alternating",
            Claim::FullSymmetric => "full-symmetric",
            Claim::CubicCyclic => "cubic-cyclic",
            Claim::CubicNonabelian => "cubic-nonabelian",
        }
    }
}

/// The cycle types (or discriminant) behind one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimWitness {
    pub claim: Claim,
    pub cycle_types: Vec<CycleType>,
    /// Set when the claim rests on the exact discriminant.
    pub uses_discriminant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub degree: usize,
    pub claims: BTreeSet<Claim>,
    pub witnesses: Vec<ClaimWitness>,
    /// Exact discriminant squareness, when it was computed.
    pub disc_square: Option<bool>,
}

impl GaloisCertificate {
    pub fn has(&self, c: Claim) -> bool {
        self.claims.contains(&c)
    }

    pub fn witness(&self, c: Claim) -> Option<&ClaimWitness> {
        self.witnesses.iter().find(|w| w.claim == c)
    }

    fn add(&mut self, claim: Claim, cycle_types: Vec<CycleType>, uses_discriminant: bool) {
        self.claims.insert(claim);
        self.witnesses.push(ClaimWitness { claim, cycle_types, uses_discriminant });
    }
}

/// Prime `p <= n - 3` such that some power of a permutation with these parts
/// is a `p`-cycle.
fn jordan_prime(parts: &[usize], n: usize) -> Option<usize> {
    parts.iter().copied().filter(|&p| p >= 2 && p + 3 <= n && is_small_prime(p)).find(|&p| {
        parts.iter().filter(|&&q| q % p == 0).count() == 1
    })
}

fn is_small_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Subset sums of `parts`, as a bitmask over `0..=n`.
fn subset_sums(parts: &[usize], n: usize) -> Vec<bool> {
    let mut s = vec![false; n + 1];
    s[0] = true;
    for &d in parts {
        for v in (d..=n).rev() {
            if s[v - d] {
                s[v] = true;
            }
        }
    }
    s
}

/// Cycle types whose subset sums leave only `0` and `n`, or `None`.
fn degree_sieve(types: &[CycleType], n: usize) -> Option<Vec<CycleType>> {
    let mut possible = vec![true; n + 1];
    let mut used = Vec::new();
    for t in types {
        let s = subset_sums(&t.parts, n);
        let before = possible.clone();
        for (p, ok) in possible.iter_mut().zip(s) {
            *p &= ok;
        }
        if possible != before {
            used.push(t.clone());
        }
        if (1..n).all(|d| !possible[d]) {
            return Some(used);
        }
    }
    None
}

pub fn certify(evidence: &CycleTypeEvidence) -> Result<GaloisCertificate> {
    let n = evidence.degree();
    let mut cert = GaloisCertificate { degree: n, claims: BTreeSet::new(), witnesses: Vec::new(), disc_square: None };
    let types = &evidence.types;
    let find = |pred: &dyn Fn(&CycleType) -> bool| types.iter().find(|t| pred(t)).cloned();

    let transitive = match find(&|t| t.parts == [n]) {
        Some(t) => Some(vec![t]),
        None => degree_sieve(types, n),
    };
    let Some(trans) = transitive else { return Ok(cert) };
    cert.add(Claim::Transitive, trans.clone(), false);

    if n == 3 {
        let square = is_square_rational(&discriminant(&evidence.polynomial)?).is_some();
        cert.disc_square = Some(square);
        if square {
            cert.add(Claim::CubicCyclic, trans.clone(), true);
            cert.add(Claim::ContainsAlternating, trans, true);
        } else {
            cert.add(Claim::CubicNonabelian, trans.clone(), true);
            cert.add(Claim::FullSymmetric, trans, true);
        }
        return Ok(cert);
    }

    let Some(stab) = find(&|t| t.parts == [1, n - 1]) else { return Ok(cert) };
    let mut two = trans.clone();
    two.push(stab);
    cert.add(Claim::TwoTransitive, two.clone(), false);

    let Some(jordan) = find(&|t| jordan_prime(&t.parts, n).is_some()) else { return Ok(cert) };
    let mut alt = two;
    alt.push(jordan);
    cert.add(Claim::ContainsAlternating, alt.clone(), false);

    if let Some(odd) = types.iter().find(|t| t.is_odd()).cloned() {
        alt.push(odd);
        cert.add(Claim::FullSymmetric, alt, false);
        cert.disc_square = Some(false);
    } else {
        let square = is_square_rational(&discriminant(&evidence.polynomial)?).is_some();
        cert.disc_square = Some(square);
        if !square {
            cert.add(Claim::FullSymmetric, alt, true);
        }
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// Finitely many cyclic cubic points, under the listed assumptions.
    Finite { assumptions: Vec<String> },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassScreen {
    pub genus: usize,
    pub certificate: GaloisCertificate,
    pub verdict: ScreenVerdict,
}

/// Galois screen for `y^2 = f(x)` with `deg f = 2g + 2 >= 8`.
pub fn weierstrass_galois_screen(f: &UniPoly, budget: usize) -> Result<WeierstrassScreen> {
    let n = f.degree_or_zero();
    if n < 8 || n % 2 == 1 {
        return Err(Error::Precondition(format!("need even degree at least 8, got {n}")));
    }
    let genus = (n - 2) / 2;
    let ev = collect_cycle_types(f, budget)?;
    let certificate = certify(&ev)?;
    let verdict = if certificate.has(Claim::ContainsAlternating) {
        let mut assumptions = vec![
            "Galois group of f is A_n or S_n: certified".to_string(),
            "Weierstrass points are the roots of f, acted on 2-transitively: follows".to_string(),
            "Jacobian is simple: Zarhin's theorem for groups containing A_n".to_string(),
        ];
        if genus == 3 {
            assumptions.push("genus 3: Bombieri-Lang conjecture assumed, unverified".to_string());
        }
        ScreenVerdict::Finite { assumptions }
    } else {
        ScreenVerdict::Inconclusive { reason: "no A_n certificate within the prime budget".into() }
    };
    Ok(WeierstrassScreen { genus, certificate, verdict })
}
