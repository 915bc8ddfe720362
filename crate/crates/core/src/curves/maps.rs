//! Rational maps between plane models, checked by substitution.

use crate::error::{Error, Result};
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::rational::int;
use crate::polyalg::unipoly::gcd_poly;

/// `(x, y) -> (x_num / x_den, y_num / y_den)` in source coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub x_num: BiPoly,
    pub x_den: BiPoly,
    pub y_num: BiPoly,
    pub y_den: BiPoly,
}

impl RationalMap {
    pub fn polynomial(x: BiPoly, y: BiPoly) -> Self {
        let one = BiPoly::constant(int(1));
        Self { x_num: x, x_den: one.clone(), y_num: y, y_den: one }
    }

    pub fn identity() -> Self {
        Self::polynomial(BiPoly::secondary_var(), BiPoly::main_var())
    }

    /// `other` after `self`.
    pub fn then(&self, other: &RationalMap) -> RationalMap {
        let (xn, xd) = substitute_ratio(&other.x_num, &other.x_den, self);
        let (yn, yd) = substitute_ratio(&other.y_num, &other.y_den, self);
        RationalMap { x_num: xn, x_den: xd, y_num: yn, y_den: yd }
    }
}

/// `b^dx d^dy F(a/b, c/d)` where `self = (a/b, c/d)`, with `dx`, `dy` the
/// degrees of `F` in its two variables.
fn homogenized(f: &BiPoly, dx: usize, dy: usize, map: &RationalMap) -> BiPoly {
    let mut acc = BiPoly::zero();
    for (i, j, c) in f.terms() {
        let t = &(&map.x_num.pow(i as u32) * &map.x_den.pow((dx - i) as u32))
            * &(&map.y_num.pow(j as u32) * &map.y_den.pow((dy - j) as u32));
        acc = &acc + &t.scale(c);
    }
    acc
}

fn substitute_ratio(num: &BiPoly, den: &BiPoly, map: &RationalMap) -> (BiPoly, BiPoly) {
    let dx = num.degree_secondary().unwrap_or(0).max(den.degree_secondary().unwrap_or(0));
    let dy = num.degree_main().unwrap_or(0).max(den.degree_main().unwrap_or(0));
    (homogenized(num, dx, dy, map), homogenized(den, dx, dy, map))
}

/// Checks that `map` sends the curve `source = 0` into `target = 0` and
/// returns its degree.
///
/// `source` must be monic in `y`. The degree is read from the `x`-lines:
/// when the first component is a rational function `r(x)`, the composite to
/// the target's `x`-line has degree `n_S * deg r`, which equals
/// `deg(map) * n_T` for the `y`-degrees `n_S`, `n_T` of the two models.
pub fn verify_map(source: &BiPoly, target: &BiPoly, map: &RationalMap) -> Result<usize> {
    let n_s = source.degree_main().ok_or(Error::ZeroPolynomial)?;
    let n_t = target.degree_main().ok_or(Error::ZeroPolynomial)?;
    if n_s == 0 || n_t == 0 || !source.leading_main().unwrap().is_one() {
        return Err(Error::Precondition("source relation must be monic of positive degree in y".into()));
    }
    if map.x_den.reduce_monic(source).is_zero() || map.y_den.reduce_monic(source).is_zero() {
        return Err(Error::Precondition("map denominator vanishes on the source".into()));
    }
    let dx = target.degree_secondary().unwrap_or(0);
    let dy = n_t;
    if !homogenized(target, dx, dy, map).reduce_monic(source).is_zero() {
        return Err(Error::NotAMorphism);
    }
    if map.x_num.degree_main().unwrap_or(0) > 0 || map.x_den.degree_main().unwrap_or(0) > 0 {
        return Err(Error::DegreeUndefined("first component depends on y".into()));
    }
    let (num, den) = (map.x_num.coeff(0), map.x_den.coeff(0));
    let g = gcd_poly(&num, &den);
    let r_degree = num.exact_div(&g).unwrap().degree_or_zero().max(den.exact_div(&g).unwrap().degree_or_zero());
    if r_degree == 0 {
        return Err(Error::DegreeUndefined("first component is constant".into()));
    }
    if (n_s * r_degree) % n_t != 0 {
        return Err(Error::DegreeUndefined("x-line degrees are incompatible".into()));
    }
    Ok(n_s * r_degree / n_t)
}
