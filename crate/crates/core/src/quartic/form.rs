use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::rational::{int, Rational};

/// Exponents of `x`, `y`, `z`.
pub type Exponents = [u32; 3];

/// A homogeneous form in `x, y, z` over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exponents, Rational>,
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*x^{}*y^{}*z^{}", e[0], e[1], e[2])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl TernaryForm {
    pub fn new(degree: u32, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::Precondition(format!("monomial {e:?} is not of degree {degree}")));
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { degree, terms: map })
    }

    pub fn zero(degree: u32) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    /// Homogenizes `f(x, y)` (secondary `x`, main `y`) to the given degree.
    pub fn homogenize(f: &BiPoly, degree: u32) -> Result<Self> {
        let terms: Vec<_> = f.terms().map(|(i, j, c)| (i as u32, j as u32, c.clone())).collect();
        if terms.iter().any(|&(i, j, _)| i + j > degree) {
            return Err(Error::Precondition(format!("total degree exceeds {degree}")));
        }
        Self::new(degree, terms.into_iter().map(|(i, j, c)| ([i, j, degree - i - j], c)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponents) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.degree, self.terms.iter().map(|(e, v)| (*e, v * c))).unwrap()
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let s = int(sign);
        let terms = self.terms.iter().map(|(e, c)| (*e, c.clone())).chain(other.terms.iter().map(|(e, c)| (*e, c * &s)));
        Self::new(self.degree, terms).unwrap()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                terms.push(([a[0] + b[0], a[1] + b[1], a[2] + b[2]], c * d));
            }
        }
        Self::new(self.degree + other.degree, terms).unwrap()
    }

    /// Partial derivative in variable `var` (0, 1, 2 for `x`, `y`, `z`).
    pub fn derivative(&self, var: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut f = *e;
            f[var] -= 1;
            (f, c * int(e[var] as i64))
        });
        Self::new(self.degree - 1, terms).unwrap()
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * num_traits::pow(p[0].clone(), e[0] as usize) * num_traits::pow(p[1].clone(), e[1] as usize) * num_traits::pow(p[2].clone(), e[2] as usize))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes each variable `v_i` by `sum_j m[i][j] v_j`.
    pub fn linear_substitute(&self, m: &[[Rational; 3]; 3]) -> Self {
        let lin: Vec<TernaryForm> = (0..3)
            .map(|i| {
                Self::new(1, (0..3).map(|j| {
                    let mut e = [0; 3];
                    e[j] = 1;
                    (e, m[i][j].clone())
                }))
                .unwrap()
            })
            .collect();
        let one = Self::new(0, [([0, 0, 0], Rational::one())]).unwrap();
        let mut acc = Self::zero(self.degree);
        for (e, c) in &self.terms {
            let mut t = one.scale(c);
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&lin[v]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Sets `z = 1`; the result has secondary variable `keep` and main
    /// variable `other` (both in `0..2`, distinct).
    pub fn dehomogenize(&self, keep: usize, other: usize) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (e[keep] as usize, e[other] as usize, c.clone())))
    }
}

/// `det [[a, b, c], [d, e, f], [g, h, i]]` over forms.
fn det3(m: &[[TernaryForm; 3]; 3]) -> TernaryForm {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    m[0][0].mul(&minor(1, 2, 1, 2)).sub(&m[0][1].mul(&minor(1, 2, 0, 2))).add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// Determinant of the matrix of second partial derivatives.
pub fn hessian(f: &TernaryForm) -> TernaryForm {
    let first: Vec<TernaryForm> = (0..3).map(|i| f.derivative(i)).collect();
    let m: [[TernaryForm; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| first[i].derivative(j)));
    det3(&m)
}

/// A nonzero quartic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryQuartic(TernaryForm);

impl TernaryQuartic {
    pub fn new(f: TernaryForm) -> Result<Self> {
        if f.degree() != 4 || f.is_zero() {
            return Err(Error::Precondition("ternary quartic must be a nonzero form of degree 4".into()));
        }
        Ok(Self(f))
    }

    /// Homogenizes an affine equation of total degree exactly 4.
    pub fn from_affine(f: &BiPoly) -> Result<Self> {
        if f.total_degree() != Some(4) {
            return Err(Error::Precondition("affine quartic must have total degree 4".into()));
        }
        Self::new(TernaryForm::homogenize(f, 4)?)
    }

    pub fn form(&self) -> &TernaryForm {
        &self.0
    }

    /// The 15 coefficients in graded-lex order `x^4, x^3 y, x^3 z, ...`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(15);
        for a in (0..=4u32).rev() {
            for b in (0..=4 - a).rev() {
                out.push(self.0.coeff([a, b, 4 - a - b]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_bivariate;
    use proptest::prelude::*;

    fn quartic(s: &str) -> TernaryQuartic {
        TernaryQuartic::from_affine(&parse_bivariate(s, 'x', 'y').unwrap()).unwrap()
    }

    #[test]
    fn fermat_hessian() {
        let f = quartic("x^4 + y^4 + 1");
        let h = hessian(f.form());
        assert_eq!(h, TernaryForm::new(6, [([2, 2, 2], int(1728))]).unwrap());
    }

    #[test]
    fn coefficient_order() {
        let f = quartic("x^4 + 2 x^3 y + 3 y");
        let c = f.coefficients();
        assert_eq!(c.len(), 15);
        assert_eq!(c[0], int(1));
        assert_eq!(c[1], int(2));
        // y z^3 is second to last
        assert_eq!(c[13], int(3));
        assert!(TernaryQuartic::from_affine(&parse_bivariate("x^3 + y", 'x', 'y').unwrap()).is_err());
    }

    #[test]
    fn substitution_and_evaluation_commute() {
        let f = quartic("x y^3 + x^2 y^2 + y^3 + 2 x y^2 - x^3 + 2 x y + 2 x - y");
        let m = [[int(1), int(2), int(0)], [int(0), int(1), int(0)], [int(3), int(0), int(1)]];
        let g = f.form().linear_substitute(&m);
        let p = [int(2), int(-1), int(5)];
        let image: [Rational; 3] = std::array::from_fn(|i| (0..3).map(|j| &m[i][j] * &p[j]).sum());
        assert_eq!(g.eval(&p), f.form().eval(&image));
    }

    fn form_strategy() -> impl Strategy<Value = TernaryForm> {
        proptest::collection::vec(-5i64..6, 15).prop_map(|c| {
            let mut terms = Vec::new();
            let mut k = 0;
            for a in 0..=4u32 {
                for b in 0..=4 - a {
                    terms.push(([a, b, 4 - a - b], int(c[k])));
                    k += 1;
                }
            }
            TernaryForm::new(4, terms).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn hessian_scaling(f in form_strategy(), l in -4i64..5) {
            let h = hessian(&f);
            prop_assert!(h.is_zero() || h.degree() == 6);
            let lambda = int(l);
            let scaled = hessian(&f.scale(&lambda));
            prop_assert_eq!(scaled, h.scale(&(&lambda * &lambda * &lambda)));
        }
    }
}
