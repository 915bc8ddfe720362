//! Plane quartics: Hessians and the degree-24 flex polynomial.
//!
//! The flexes of a smooth plane quartic `F = 0` are its intersections with
//! the Hessian curve `H = 0` (degree 6), 24 with multiplicity. They are the
//! Weierstrass points of the genus-3 curve. Elimination is by resultant in
//! an affine chart; shears of the projection centre give a squarefree
//! degree-24 polynomial whenever the flexes are simple.

pub mod flex;
pub mod form;

pub use flex::{
    check_smooth, flex_galois_report, flex_polynomial, flex_polynomial_from, report_for, Coordinate, FlexPolynomial,
    FlexReport, FlexVerdict,
};
pub use form::{hessian, TernaryForm, TernaryQuartic};
