use std::collections::BTreeSet;

use num_traits::Zero;

use crate::curves::TrigonalModel;
use crate::error::Result;
use crate::polyalg::rational::Rational;

use super::disc_curve::{discriminant_curve, DiscShape};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Puncture {
    Finite(Rational),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PunctureVerdict {
    /// Finitely many integral cyclic cubic points arise from this map.
    FiniteIntegralCyclic { rule: String },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureReport {
    /// Distinct images `f(D)`, sorted.
    pub punctures: Vec<Puncture>,
    pub image_count: usize,
    /// Punctures induced on the discriminant curve. For a split
    /// discriminant this counts per component.
    pub induced: usize,
    pub disc_genus: usize,
    pub verdict: PunctureVerdict,
}

pub fn puncture_report(m: &TrigonalModel, punctures: &[Puncture]) -> Result<PunctureReport> {
    let d = discriminant_curve(m)?;
    let punctures: Vec<Puncture> = punctures.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let image_count = punctures.len();
    let split = d.shape == DiscShape::Split;
    let s = &d.sqfree_part;
    let induced = punctures
        .iter()
        .map(|p| match p {
            _ if split => 1,
            Puncture::Finite(x) if !s.eval(x).is_zero() => 2,
            Puncture::Finite(_) => 1,
            Puncture::Infinity if s.degree_or_zero() % 2 == 0 => 2,
            Puncture::Infinity => 1,
        })
        .sum();
    let finite = |rule: &str| PunctureVerdict::FiniteIntegralCyclic { rule: rule.into() };
    let verdict = if punctures.is_empty() {
        PunctureVerdict::Inconclusive { reason: "no punctures: the affine curve is projective".into() }
    } else if d.shape == DiscShape::ConstantNonSquare {
        finite("no unramified fibre has square discriminant")
    } else if image_count >= 3 {
        finite("#f(D) >= 3")
    } else if d.genus >= 1 {
        finite("discriminant curve of genus >= 1 with a puncture (Siegel)")
    } else if induced >= 3 {
        finite("genus-0 discriminant curve with >= 3 punctures (Siegel)")
    } else {
        PunctureVerdict::Inconclusive { reason: format!("genus-0 discriminant curve with {induced} punctures") }
    };
    Ok(PunctureReport { punctures, image_count, induced, disc_genus: d.genus, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_univariate;
    use crate::polyalg::rational::int;

    fn model(p: &str, q: &str) -> TrigonalModel {
        TrigonalModel::new(parse_univariate(p, 'x').unwrap(), parse_univariate(q, 'x').unwrap()).unwrap()
    }

    fn is_finite(r: &PunctureReport) -> bool {
        matches!(r.verdict, PunctureVerdict::FiniteIntegralCyclic { .. })
    }

    #[test]
    fn example1_three_images() {
        let g = "(27x^10 + x^3 - 16x + 16)";
        let m = model(&format!("-4{g}"), &format!("-16x^5{g}"));
        let ps: Vec<_> = (0..3).map(|i| Puncture::Finite(int(i))).collect();
        let r = puncture_report(&m, &ps).unwrap();
        assert_eq!(r.image_count, 3);
        assert!(is_finite(&r));
        let r = puncture_report(&m, &[]).unwrap();
        assert!(!is_finite(&r));
        let r = puncture_report(&m, &[Puncture::Infinity]).unwrap();
        assert!(is_finite(&r));
    }

    #[test]
    fn genus0_counts() {
        // w^2 = 3 (x - 1)
        let m = model("-3x", "2x");
        let r = puncture_report(&m, &[Puncture::Finite(int(1)), Puncture::Finite(int(2))]).unwrap();
        assert_eq!(r.induced, 3);
        assert!(is_finite(&r));
        let r = puncture_report(&m, &[Puncture::Finite(int(1)), Puncture::Infinity]).unwrap();
        assert_eq!(r.induced, 2);
        assert!(!is_finite(&r));
        let r = puncture_report(&m, &[Puncture::Finite(int(5)), Puncture::Finite(int(5))]).unwrap();
        assert_eq!(r.image_count, 1);
        assert_eq!(r.induced, 2);
        assert!(!is_finite(&r));
    }
}
