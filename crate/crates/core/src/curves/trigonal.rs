use crate::error::{Error, Result};
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::modp::factor_mod_p;
use crate::polyalg::primes::{primes_from, WITNESS_PRIME_START};
use crate::polyalg::rational::{int, Rational};
use crate::polyalg::resultant::cubic_discriminant;
use crate::polyalg::unipoly::UniPoly;

const WITNESS_POINTS: usize = 20;
const WITNESS_PRIMES: usize = 5;

/// Evidence that `y^3 + p y + q` is irreducible over `Q(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityWitness {
    /// The fibre over `x0` is irreducible modulo `prime`.
    Specialization { x0: Rational, prime: u64 },
    /// No witness found within the attempt budget.
    Unverified,
}

/// The curve `y^3 + p(x) y + q(x) = 0` with its projection to `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigonalModel {
    p: UniPoly,
    q: UniPoly,
    discriminant: UniPoly,
    irreducibility: IrreducibilityWitness,
}

/// `0, 1, -1, 2, -2, ...`
pub fn integer_walk() -> impl Iterator<Item = Rational> {
    (0i64..).map(|n| if n % 2 == 1 { int((n + 1) / 2) } else { int(-n / 2) })
}

impl TrigonalModel {
    pub fn new(p: UniPoly, q: UniPoly) -> Result<Self> {
        let discriminant = cubic_discriminant(&p, &q);
        if discriminant.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        let irreducibility = find_witness(&p, &q);
        Ok(Self { p, q, discriminant, irreducibility })
    }

    /// Ingests a general cubic `c3 y^3 + c2 y^2 + c1 y + c0` whose leading
    /// coefficient is a nonzero constant, depressing it by `y -> y - c2/3`.
    pub fn from_cubic(f: &BiPoly) -> Result<Self> {
        if f.degree_main() != Some(3) {
            return Err(Error::NotTrigonal);
        }
        let lead = f.coeff(3);
        if !lead.is_constant() {
            return Err(Error::NotTrigonal);
        }
        let inv = lead.leading().unwrap().recip();
        let a2 = f.coeff(2).scale(&inv);
        let a1 = f.coeff(1).scale(&inv);
        let a0 = f.coeff(0).scale(&inv);
        let third = Rational::new(1.into(), 3.into());
        let p = &a1 - &(&a2 * &a2).scale(&third);
        let q = &(&a0 - &(&a1 * &a2).scale(&third)) + &a2.pow(3).scale(&Rational::new(2.into(), 27.into()));
        Self::new(p, q)
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    /// `-4 p^3 - 27 q^2`.
    pub fn discriminant(&self) -> &UniPoly {
        &self.discriminant
    }

    pub fn irreducibility(&self) -> &IrreducibilityWitness {
        &self.irreducibility
    }

    pub fn relation(&self) -> BiPoly {
        BiPoly::new(vec![self.q.clone(), self.p.clone(), UniPoly::zero(), UniPoly::one()])
    }

    /// The fibre `y^3 + p(x0) y + q(x0)`.
    pub fn fibre(&self, x0: &Rational) -> UniPoly {
        UniPoly::new(vec![self.q.eval(x0), self.p.eval(x0), int(0), int(1)])
    }
}

fn find_witness(p: &UniPoly, q: &UniPoly) -> IrreducibilityWitness {
    for x0 in integer_walk().take(WITNESS_POINTS) {
        let fibre = UniPoly::new(vec![q.eval(&x0), p.eval(&x0), int(0), int(1)]);
        for prime in primes_from(WITNESS_PRIME_START).take(WITNESS_PRIMES) {
            if let Ok(pattern) = factor_mod_p(&fibre, prime) {
                if pattern == [(3, 1)] {
                    return IrreducibilityWitness::Specialization { x0, prime };
                }
            }
        }
    }
    IrreducibilityWitness::Unverified
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_bivariate, parse_univariate};

    #[test]
    fn witness_for_pure_cube() {
        let m = TrigonalModel::new(UniPoly::zero(), UniPoly::from_ints(&[0, -1])).unwrap();
        let IrreducibilityWitness::Specialization { x0, prime } = m.irreducibility().clone() else {
            panic!("expected a witness");
        };
        assert_eq!(factor_mod_p(&m.fibre(&x0), prime).unwrap(), vec![(3, 1)]);
    }

    #[test]
    fn reducible_model_is_unverified() {
        // y (y^2 - x)
        let m = TrigonalModel::new(UniPoly::from_ints(&[0, -1]), UniPoly::zero()).unwrap();
        assert_eq!(m.irreducibility(), &IrreducibilityWitness::Unverified);
    }

    #[test]
    fn repeated_root_rejected() {
        let f = parse_bivariate("y^3 - 3x^2y + 2x^3", 'x', 'y').unwrap();
        assert_eq!(TrigonalModel::from_cubic(&f), Err(Error::ZeroDiscriminant));
    }

    #[test]
    fn depressed_normalization() {
        // (y + 1)^3 + x (y + 1) + 1 depresses to y^3 + x y + 1
        let f = parse_bivariate("(y+1)^3 + x(y+1) + 1", 'x', 'y').unwrap();
        let m = TrigonalModel::from_cubic(&f).unwrap();
        assert_eq!(m.p(), &UniPoly::x());
        assert_eq!(m.q(), &UniPoly::one());
        let g = parse_bivariate("2y^3 + 2x", 'x', 'y').unwrap();
        assert_eq!(TrigonalModel::from_cubic(&g).unwrap().q(), &parse_univariate("x", 'x').unwrap());
        assert_eq!(TrigonalModel::from_cubic(&parse_bivariate("x y^3 + 1", 'x', 'y').unwrap()), Err(Error::NotTrigonal));
    }
}
