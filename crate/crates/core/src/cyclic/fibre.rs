use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::curves::TrigonalModel;
use crate::error::{Error, Result};
use crate::polyalg::modp::{factor_mod_p, PrimePoly};
use crate::polyalg::primes::{primes_from, WITNESS_PRIME_START};
use crate::polyalg::rational::{denominator_lcm, int, is_square_rational, Rational};
use crate::polyalg::unipoly::UniPoly;

/// Primes tried for a mod-p irreducibility witness.
pub const IRREDUCIBILITY_PRIMES: usize = 25;
/// Divisors up to this bound are tried in the rational-root search.
pub const DIVISOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityEvidence {
    /// The fibre has no root modulo `prime` (a good prime for the monic
    /// cubic), hence none over `Q`.
    IrreducibleModP { prime: u64 },
    /// The divisor search was complete and found no root.
    NoRationalRoot,
    RationalRoot { root: Rational },
    /// Neither certificate was found within budget.
    Undecided,
}

impl IrreducibilityEvidence {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Self::IrreducibleModP { .. } | Self::NoRationalRoot)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibreVerdict {
    CyclicCubic,
    NonCyclicCubic,
    Reducible,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicFieldCertificate {
    pub x0: Rational,
    /// `y^3 + p(x0) y + q(x0)`.
    pub fibre: UniPoly,
    pub discriminant: Rational,
    pub disc_sqrt: Option<Rational>,
    pub evidence: IrreducibilityEvidence,
    pub verdict: FibreVerdict,
}

fn fibre_disc(f: &UniPoly) -> Rational {
    let a = f.coeff(1);
    let b = f.coeff(0);
    int(-4) * &a * &a * &a - int(27) * &b * &b
}

/// Integral monic model `Y^3 + A Y + B` with `y = Y / d`.
fn integral_model(f: &UniPoly) -> (BigInt, BigInt, BigInt) {
    let a = f.coeff(1);
    let b = f.coeff(0);
    let d = denominator_lcm([&a, &b]);
    let dr = Rational::from_integer(d.clone());
    let aa = (&a * &dr * &dr).to_integer();
    let bb = (&b * &dr * &dr * &dr).to_integer();
    (d, aa, bb)
}

/// Searches for an integral root of `Y^3 + A Y + B` among divisors of `B`.
/// Returns `Ok(root)`, or `Err(complete)` when none was found.
fn integral_root(a: &BigInt, b: &BigInt) -> std::result::Result<BigInt, bool> {
    if b.is_zero() {
        return Ok(BigInt::zero());
    }
    let n = b.abs();
    let eval = |y: &BigInt| y * y * y + a * y + b;
    let limit = BigInt::from(DIVISOR_BOUND);
    let mut d = BigInt::from(1);
    while d <= limit && &d * &d <= n {
        if n.is_multiple_of(&d) {
            let e = &n / &d;
            for c in [d.clone(), -d.clone(), e.clone(), -e] {
                if eval(&c).is_zero() {
                    return Ok(c);
                }
            }
        }
        d += 1;
    }
    Err(&d * &d > n)
}

fn evidence(f: &UniPoly) -> IrreducibilityEvidence {
    for prime in primes_from(WITNESS_PRIME_START).take(IRREDUCIBILITY_PRIMES) {
        if let Ok(pattern) = factor_mod_p(f, prime) {
            if pattern == [(3, 1)] {
                return IrreducibilityEvidence::IrreducibleModP { prime };
            }
        }
    }
    let (d, a, b) = integral_model(f);
    match integral_root(&a, &b) {
        Ok(r) => IrreducibilityEvidence::RationalRoot { root: Rational::new(r, d) },
        Err(true) => IrreducibilityEvidence::NoRationalRoot,
        Err(false) => IrreducibilityEvidence::Undecided,
    }
}

pub fn fibre_certificate(m: &TrigonalModel, x0: &Rational) -> Result<CubicFieldCertificate> {
    let fibre = m.fibre(x0);
    let discriminant = fibre_disc(&fibre);
    if discriminant.is_zero() {
        return Err(Error::RamifiedFibre(format!("discriminant vanishes at x = {x0}")));
    }
    let disc_sqrt = is_square_rational(&discriminant);
    let evidence = evidence(&fibre);
    let verdict = match (&evidence, &disc_sqrt) {
        (IrreducibilityEvidence::RationalRoot { .. }, _) => FibreVerdict::Reducible,
        (IrreducibilityEvidence::Undecided, _) => FibreVerdict::Undecided,
        (_, Some(_)) => FibreVerdict::CyclicCubic,
        (_, None) => FibreVerdict::NonCyclicCubic,
    };
    Ok(CubicFieldCertificate { x0: x0.clone(), fibre, discriminant, disc_sqrt, evidence, verdict })
}

/// Re-verifies a certificate from the model alone, using routes that do not
/// share code with [`fibre_certificate`]'s decisions: the discriminant from
/// the polynomial `disc(x)`, root counting over the whole residue field, and
/// direct root evaluation.
pub fn recheck_certificate(m: &TrigonalModel, cert: &CubicFieldCertificate) -> bool {
    let fibre = UniPoly::new(vec![m.q().eval(&cert.x0), m.p().eval(&cert.x0), int(0), int(1)]);
    if fibre != cert.fibre {
        return false;
    }
    let disc = m.discriminant().eval(&cert.x0);
    if disc != cert.discriminant || disc.is_zero() {
        return false;
    }
    match &cert.disc_sqrt {
        Some(r) if r * r != disc => return false,
        None if is_square_rational(&disc).is_some() => return false,
        _ => {}
    }
    let evidence_ok = match &cert.evidence {
        IrreducibilityEvidence::IrreducibleModP { prime } => match PrimePoly::reduce(&fibre, *prime) {
            Some(r) => r.degree() == Some(3) && r.roots_exhaustive().is_empty(),
            None => false,
        },
        IrreducibilityEvidence::RationalRoot { root } => fibre.eval(root).is_zero(),
        IrreducibilityEvidence::NoRationalRoot => {
            let (_, a, b) = integral_model(&fibre);
            let bound = b.abs();
            bound <= BigInt::from(DIVISOR_BOUND) * BigInt::from(DIVISOR_BOUND) && integral_root(&a, &b).is_err()
        }
        IrreducibilityEvidence::Undecided => true,
    };
    let verdict_ok = match cert.verdict {
        FibreVerdict::CyclicCubic => cert.evidence.is_irreducible() && cert.disc_sqrt.is_some(),
        FibreVerdict::NonCyclicCubic => cert.evidence.is_irreducible() && cert.disc_sqrt.is_none(),
        FibreVerdict::Reducible => matches!(cert.evidence, IrreducibilityEvidence::RationalRoot { .. }),
        FibreVerdict::Undecided => cert.evidence == IrreducibilityEvidence::Undecided,
    };
    evidence_ok && verdict_ok
}
