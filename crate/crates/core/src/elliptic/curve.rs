use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::rational::{int, trial_factor, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl ECPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { y, .. } => Some(y),
        }
    }
}

/// `y^2 = x^3 + a x + b` with `4a^3 + 27b^2 != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    a: Rational,
    b: Rational,
}

impl WeierstrassCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let c = Self { a, b };
        if c.disc_core().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(int(a), int(b))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `4a^3 + 27b^2`.
    pub fn disc_core(&self) -> Rational {
        int(4) * &self.a * &self.a * &self.a + int(27) * &self.b * &self.b
    }

    /// `-16 (4a^3 + 27b^2)`.
    pub fn discriminant(&self) -> Rational {
        int(-16) * self.disc_core()
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + &self.a * x + &self.b
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    fn check(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    pub fn neg(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), -y),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) = (p, q) else {
            return if p.is_infinity() { q.clone() } else { p.clone() };
        };
        let slope = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return ECPoint::Infinity;
            }
            (int(3) * x1 * x1 + &self.a) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        ECPoint::affine(x3, y3)
    }

    /// `k P` by double-and-add; negative `k` uses `-P`.
    pub fn mul(&self, p: &ECPoint, k: i64) -> Result<ECPoint> {
        self.check(p)?;
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }
}

/// `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongWeierstrass {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

impl LongWeierstrass {
    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => {
                y * y + &self.a1 * x * y + &self.a3 * y
                    == x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6
            }
        }
    }

    /// Completes the square, depresses the cubic, and rescales by the least
    /// `lambda` making the short model integral.
    pub fn to_short(&self) -> Result<(WeierstrassCurve, ShortTransform)> {
        let b2 = &self.a1 * &self.a1 + int(4) * &self.a2;
        let b4 = &self.a1 * &self.a3 + int(2) * &self.a4;
        let b6 = &self.a3 * &self.a3 + int(4) * &self.a6;
        // eta^2 = x^3 + c2 x^2 + c1 x + c0
        let c2 = &b2 / int(4);
        let c1 = &b4 / int(2);
        let c0 = &b6 / int(4);
        let shift = &c2 / int(3);
        let a = &c1 - &c2 * &c2 / int(3);
        let b = &c0 - &c1 * &c2 / int(3) + int(2) * &c2 * &c2 * &c2 / int(27);
        let lambda = integral_scale(&a, &b);
        let l = Rational::from_integer(lambda.clone());
        let l2 = &l * &l;
        let curve = WeierstrassCurve::new(&a * &l2 * &l2, &b * &l2 * &l2 * &l2)?;
        let t = ShortTransform { a1: self.a1.clone(), a3: self.a3.clone(), shift, lambda: l };
        Ok((curve, t))
    }
}

/// Least positive integer `lambda` with `lambda^4 a` and `lambda^6 b`
/// integral.
fn integral_scale(a: &Rational, b: &Rational) -> BigInt {
    let mut lambda = BigInt::one();
    let mut need: Vec<(BigInt, u32)> = Vec::new();
    for (r, power) in [(a, 4u32), (b, 6u32)] {
        if r.is_zero() {
            continue;
        }
        // an unfactored cofactor is treated as prime, which can only
        // overestimate lambda
        let (mut primes, rest) = trial_factor(r.denom(), 1_000_000);
        if !rest.is_one() {
            primes.push((rest, 1));
        }
        for (prime, e) in primes {
            let k = e.div_ceil(power);
            match need.iter_mut().find(|(p, _)| *p == prime) {
                Some(entry) => entry.1 = entry.1.max(k),
                None => need.push((prime, k)),
            }
        }
    }
    for (p, k) in need {
        lambda *= num_traits::pow(p, k as usize);
    }
    lambda
}

/// Point transport between a long model and its short form:
/// `X = lambda^2 (x + shift)`, `Y = lambda^3 (y + (a1 x + a3) / 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortTransform {
    pub a1: Rational,
    pub a3: Rational,
    pub shift: Rational,
    pub lambda: Rational,
}

impl ShortTransform {
    pub fn forward(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => {
                let l2 = &self.lambda * &self.lambda;
                let eta = y + (&self.a1 * x + &self.a3) / int(2);
                ECPoint::affine(&l2 * (x + &self.shift), l2 * &self.lambda * eta)
            }
        }
    }

    pub fn backward(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => {
                let l2 = &self.lambda * &self.lambda;
                let xl = x / &l2 - &self.shift;
                let eta = y / (l2 * &self.lambda);
                let yl = eta - (&self.a1 * &xl + &self.a3) / int(2);
                ECPoint::affine(xl, yl)
            }
        }
    }
}
