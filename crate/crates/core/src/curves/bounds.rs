//! Genus bounds: the Castelnuovo-Severi inequality and ramification
//! budgets for degree-3 maps to the line.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsVerdict {
    /// Two such maps cannot coexist without a common factorization.
    Excluded,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CsReport {
    pub bound: u64,
    pub verdict: CsVerdict,
}

/// `d1 g1 + d2 g2 + (d1 - 1)(d2 - 1)`.
pub fn cs_bound(d1: u64, g1: u64, d2: u64, g2: u64) -> Result<u64> {
    if d1 < 2 || d2 < 2 {
        return Err(Error::Precondition("map degrees must be at least 2".into()));
    }
    Ok(d1 * g1 + d2 * g2 + (d1 - 1) * (d2 - 1))
}

pub fn cs_check(g: u64, d1: u64, g1: u64, d2: u64, g2: u64) -> Result<CsReport> {
    let bound = cs_bound(d1, g1, d2, g2)?;
    let verdict = if g > bound { CsVerdict::Excluded } else { CsVerdict::Inconclusive };
    Ok(CsReport { bound, verdict })
}

/// Ramification budget of a degree-3 map from a genus-`g` curve to the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeierBudget {
    /// `2g + 4`, counted with multiplicity.
    pub total: u64,
    pub max_triple: u64,
    /// Present when the discriminant curve has genus at most 1, which
    /// leaves at most 4 simple branch points.
    pub min_triple: Option<u64>,
    pub feasible: bool,
}

pub fn weier_budget(g: u64, disc_genus_le_1: bool) -> Result<WeierBudget> {
    if g < 2 {
        return Err(Error::Precondition("genus must be at least 2".into()));
    }
    let total = 2 * g + 4;
    let max_triple = total / 2;
    let min_triple = disc_genus_le_1.then_some((total - 4) / 2);
    let feasible = min_triple.is_none_or(|m| m <= max_triple);
    Ok(WeierBudget { total, max_triple, min_triple, feasible })
}

/// `t` triple points use `2t` of the `2g + 4` budget.
pub fn triple_points_infeasible(g: u64, t: u64) -> bool {
    2 * t > 2 * g + 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn castelnuovo_severi_values() {
        assert_eq!(cs_bound(2, 0, 3, 1).unwrap(), 5);
        assert_eq!(cs_check(9, 2, 0, 3, 1).unwrap().verdict, CsVerdict::Excluded);
        assert_eq!(cs_check(5, 2, 0, 3, 1).unwrap().verdict, CsVerdict::Inconclusive);
        assert_eq!(cs_bound(2, 0, 3, 0).unwrap(), 2);
        assert_eq!(cs_check(3, 2, 0, 3, 0).unwrap().verdict, CsVerdict::Excluded);
        assert!(cs_bound(1, 0, 3, 0).is_err());
    }

    #[test]
    fn budgets() {
        assert_eq!(weier_budget(3, false).unwrap().max_triple, 5);
        let b = weier_budget(5, true).unwrap();
        assert_eq!(b.min_triple, Some(5));
        assert!(b.feasible);
        for g in 2..=10 {
            assert!(triple_points_infeasible(g, 2 * g + 2));
            assert!(!triple_points_infeasible(g, g + 2));
        }
        assert!(weier_budget(1, false).is_err());
    }

    proptest! {
        #[test]
        fn cs_bound_symmetric(d1 in 2u64..20, g1 in 0u64..20, d2 in 2u64..20, g2 in 0u64..20) {
            prop_assert_eq!(cs_bound(d1, g1, d2, g2).unwrap(), cs_bound(d2, g2, d1, g1).unwrap());
        }
    }
}
