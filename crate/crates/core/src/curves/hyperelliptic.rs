use crate::error::{Error, Result};
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::squarefree::is_squarefree;
use crate::polyalg::unipoly::UniPoly;

/// The curve `y^2 = f(x)` with `f` squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    f: UniPoly,
}

impl HyperellipticModel {
    /// Requires `deg f >= 5`, so the genus is at least 2.
    pub fn new(f: UniPoly) -> Result<Self> {
        let m = Self::with_low_genus(f)?;
        if m.f.degree_or_zero() < 5 {
            return Err(Error::Precondition("hyperelliptic model needs degree at least 5".into()));
        }
        Ok(m)
    }

    /// Accepts any squarefree nonconstant `f`, for discriminant curves of
    /// genus 0 or 1.
    pub fn with_low_genus(f: UniPoly) -> Result<Self> {
        if f.degree_or_zero() == 0 {
            return Err(Error::Precondition("hyperelliptic model needs a nonconstant polynomial".into()));
        }
        if !is_squarefree(&f) {
            return Err(Error::NotSquarefree);
        }
        Ok(Self { f })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        (self.f.degree_or_zero() - 1) / 2
    }

    /// `y^2 - f(x)` as a polynomial in `y`.
    pub fn relation(&self) -> BiPoly {
        &BiPoly::main_var().pow(2) - &BiPoly::from_secondary(self.f.clone())
    }
}

pub fn genus_hyperelliptic(m: &HyperellipticModel) -> usize {
    m.genus()
}
