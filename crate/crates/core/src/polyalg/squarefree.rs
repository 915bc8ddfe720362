use crate::error::{Error, Result};
use crate::polyalg::rational::{is_square_rational, Rational};
use crate::polyalg::unipoly::{gcd_poly, UniPoly};

/// `f = scalar * prod factor^multiplicity` with monic, squarefree, pairwise
/// coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub scalar: Rational,
    pub parts: Vec<(UniPoly, u32)>,
}

impl SquarefreeDecomposition {
    /// Product of the factors with odd multiplicity (monic).
    pub fn odd_part(&self) -> UniPoly {
        self.parts
            .iter()
            .filter(|(_, m)| m % 2 == 1)
            .fold(UniPoly::one(), |acc, (f, _)| &acc * f)
    }

    /// `prod factor^(multiplicity / 2)`, so that
    /// `f = scalar * odd_part * square_cofactor^2`.
    pub fn square_cofactor(&self) -> UniPoly {
        self.parts
            .iter()
            .fold(UniPoly::one(), |acc, (f, m)| &acc * &f.pow(m / 2))
    }

    /// Radical of the input: product of all distinct factors.
    pub fn radical(&self) -> UniPoly {
        self.parts.iter().fold(UniPoly::one(), |acc, (f, _)| &acc * f)
    }

    pub fn reassemble(&self) -> UniPoly {
        self.parts
            .iter()
            .fold(UniPoly::constant(self.scalar.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Yun's squarefree decomposition over the rationals.
pub fn squarefree_decompose(f: &UniPoly) -> Result<SquarefreeDecomposition> {
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let f = f.monic();
    let mut parts = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { scalar: lc, parts });
    }
    let df = f.derivative();
    let a0 = gcd_poly(&f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = gcd_poly(&b, &d);
        b = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            parts.push((a, i));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { scalar: lc, parts })
}

pub fn is_squarefree(f: &UniPoly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => gcd_poly(f, &f.derivative()).is_one(),
    }
}

/// Exact square root of a polynomial when it is a square in `Q[x]`.
pub fn is_square_polynomial(f: &UniPoly) -> Result<Option<UniPoly>> {
    let dec = squarefree_decompose(f)?;
    if dec.parts.iter().any(|(_, m)| m % 2 == 1) {
        return Ok(None);
    }
    let Some(root) = is_square_rational(&dec.scalar) else {
        return Ok(None);
    };
    Ok(Some(dec.square_cofactor().scale(&root)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn g() -> UniPoly {
        let mut c = vec![0i64; 11];
        c[10] = 27;
        c[3] = 1;
        c[1] = -16;
        c[0] = 16;
        p(&c)
    }

    #[test]
    fn pure_square() {
        let d = squarefree_decompose(&p(&[0, 0, 1])).unwrap();
        assert_eq!(d.parts, vec![(p(&[0, 1]), 2)]);
        assert!(d.odd_part().is_one());
    }

    #[test]
    fn example_discriminant_odd_part() {
        let s = p(&[16, -16, 0, 1]);
        let delta = (&g() * &g()).scale(&int(256)) * &s;
        let d = squarefree_decompose(&delta).unwrap();
        assert_eq!(d.odd_part(), s);
        assert_eq!(d.reassemble(), delta);
        assert_eq!(d.scalar, int(256 * 27 * 27));
        assert_eq!(is_square_rational(&d.scalar), Some(int(432)));
    }

    #[test]
    fn mixed_multiplicities() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2);
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d.parts, vec![(p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
        assert_eq!(d.odd_part(), p(&[-1, 1]));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(squarefree_decompose(&UniPoly::zero()), Err(Error::ZeroPolynomial)));
        assert!(is_square_polynomial(&UniPoly::zero()).is_err());
    }

    #[test]
    fn square_polynomials() {
        let s = p(&[16, -16, 0, 1]);
        let delta = (&g() * &g()).scale(&int(256)) * &s;
        assert_eq!(is_square_polynomial(&delta).unwrap(), None);
        assert_eq!(is_square_polynomial(&p(&[9, 18, 9])).unwrap(), Some(p(&[3, 3])));
        assert_eq!(is_square_polynomial(&p(&[1, 4, 4])).unwrap(), Some(p(&[1, 2])));
        assert_eq!(is_square_polynomial(&p(&[2, 4, 2])).unwrap(), None);
    }
}
