//! Resultants and discriminants.
//!
//! Two independent routes compute the univariate resultant: the Euclidean
//! remainder sequence over the rationals, and the determinant of the
//! Sylvester matrix by Gaussian elimination. They are cross-checked in tests.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::rational::{int, Rational};
use crate::polyalg::unipoly::UniPoly;

/// Resultant of two nonzero polynomials by the Euclidean remainder sequence.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(euclid_resultant(a.clone(), b.clone()))
}

fn euclid_resultant(mut a: UniPoly, mut b: UniPoly) -> Rational {
    let mut acc = Rational::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return acc * pow_rat(b.leading().unwrap(), da);
        }
        if da == 0 {
            return acc * pow_rat(a.leading().unwrap(), db);
        }
        let r = a.rem(&b);
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if da % 2 == 1 && db % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(b.leading().unwrap(), da - dr);
        a = b;
        b = r;
    }
}

fn pow_rat(r: &Rational, e: usize) -> Rational {
    num_traits::pow(r.clone(), e)
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m + n == 0 {
        return Ok(Rational::one());
    }
    let size = m + n;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for j in 0..=m {
            rows[i][i + j] = a.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            rows[n + i][i + j] = b.coeff(n - j);
        }
    }
    Ok(determinant(rows))
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            rows.swap(piv, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det *= &pivot;
        let inv = pivot.recip();
        let (upper, lower) = rows.split_at_mut(col + 1);
        let pivot = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)` of a polynomial of
/// degree at least 1.
pub fn discriminant(f: &UniPoly) -> Result<Rational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::Precondition("discriminant of a constant".into()));
    }
    if n == 1 {
        return Ok(Rational::one());
    }
    let r = resultant(f, &f.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 1 { int(-1) } else { int(1) };
    Ok(sign * r / f.leading().unwrap())
}

/// `-4 p^3 - 27 q^2`, the discriminant of `y^3 + p y + q` over `Q(x)`.
pub fn cubic_discriminant(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let p3 = &(p * p) * p;
    let q2 = q * q;
    &p3.scale(&int(-4)) - &q2.scale(&int(27))
}
