use num_bigint::BigInt;
use num_traits::One;

use crate::curves::TrigonalModel;
use crate::error::Result;
use crate::polyalg::bipoly::BiPoly;
use crate::polyalg::rational::{square_class, Rational};
use crate::polyalg::squarefree::squarefree_decompose;
use crate::polyalg::unipoly::UniPoly;

/// Trial-division bound for square classes of scalars.
pub const SQUARE_CLASS_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscShape {
    /// The discriminant is a square in `Q(x)`: the cover is Galois with group C3.
    Split,
    /// The discriminant is a non-square constant times a square: no
    /// unramified fibre has square discriminant.
    ConstantNonSquare,
    Genus0,
    Genus1,
    HigherGenus,
}

/// `w^2 = c S(x)` with `disc = c r^2 S C^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantCurve {
    pub discriminant: UniPoly,
    /// Monic product of the odd-multiplicity factors.
    pub sqfree_part: UniPoly,
    /// Monic `C`.
    pub square_cofactor: UniPoly,
    /// Scalar of the squarefree decomposition.
    pub scalar: Rational,
    /// Square class `c` of the scalar.
    pub scalar_class: BigInt,
    /// `r` with `scalar = c r^2`.
    pub scalar_root: Rational,
    pub shape: DiscShape,
    pub genus: usize,
}

impl DiscriminantCurve {
    /// `c S(x)`, the right side of the model.
    pub fn rhs(&self) -> UniPoly {
        self.sqfree_part.scale(&Rational::from_integer(self.scalar_class.clone()))
    }

    pub fn class(&self) -> Rational {
        Rational::from_integer(self.scalar_class.clone())
    }

    /// `w^2 - c S(x)`.
    pub fn relation(&self) -> BiPoly {
        &BiPoly::main_var().pow(2) - &BiPoly::from_secondary(self.rhs())
    }
}

pub fn discriminant_curve(m: &TrigonalModel) -> Result<DiscriminantCurve> {
    let dec = squarefree_decompose(m.discriminant())?;
    let sqfree_part = dec.odd_part();
    let (scalar_class, scalar_root) = square_class(&dec.scalar, SQUARE_CLASS_BOUND);
    let degree = sqfree_part.degree_or_zero();
    let shape = match degree {
        0 if scalar_class.is_one() => DiscShape::Split,
        0 => DiscShape::ConstantNonSquare,
        1 | 2 => DiscShape::Genus0,
        3 | 4 => DiscShape::Genus1,
        _ => DiscShape::HigherGenus,
    };
    let genus = if degree == 0 { 0 } else { (degree - 1) / 2 };
    Ok(DiscriminantCurve {
        discriminant: m.discriminant().clone(),
        sqfree_part,
        square_cofactor: dec.square_cofactor(),
        scalar: dec.scalar,
        scalar_class,
        scalar_root,
        shape,
        genus,
    })
}
