use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::curves::trigonal::integer_walk;
use crate::curves::TrigonalModel;
use crate::error::{Error, Result};
use crate::polyalg::rational::Rational;

use super::classify::{ClassificationReport, Verdict, Witness};
use super::fibre::{fibre_certificate, CubicFieldCertificate, FibreVerdict, IrreducibilityEvidence};

/// A walk candidate that did not produce a cyclic certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkipReason {
    Ramified,
    Reducible { root: Rational },
    Undecided,
    /// Square discriminant was expected from the walk but not found.
    NonCyclic,
    /// The walk point lies over `x = infinity`.
    AtInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedFibre {
    pub step: usize,
    pub x0: Option<Rational>,
    pub reason: SkipReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Cyclic cubic certificates in walk order.
    pub certificates: Vec<CubicFieldCertificate>,
    pub skipped: Vec<SkippedFibre>,
    /// True when `max_steps` ran out before `count` certificates.
    pub exhausted: bool,
    pub steps: usize,
}

const BATCH: usize = 8;

/// Walks the classification witness and certifies fibres until `count`
/// cyclic cubic certificates are found or `max_steps` candidates have been
/// examined. Repeated base values are visited once.
pub fn enumerate_cyclic_points(
    m: &TrigonalModel,
    report: &ClassificationReport,
    count: usize,
    max_steps: usize,
) -> Result<Enumeration> {
    let mut walk: Box<dyn Iterator<Item = Result<Option<Rational>>>> = match &report.verdict {
        Verdict::C3Cover => Box::new(integer_walk().map(|x| Ok(Some(x)))),
        Verdict::InfiniteCertified(w) => match w.as_ref() {
            Witness::Parametrization(p) => {
                let p = p.clone();
                Box::new(integer_walk().map(move |t| Ok(p.eval(&t).map(|(x, _)| x))))
            }
            Witness::PositiveRank { reduction, certificate } => {
                let reduction = reduction.clone();
                let base = certificate.witness.clone();
                Box::new(integer_walk().skip(1).map(move |k| {
                    let k: i64 = k.to_integer().try_into().map_err(|_| Error::Precondition("multiplier overflow".into()))?;
                    let pt = reduction.curve().mul(&base, k)?;
                    reduction.base_x(&pt)
                }))
            }
        },
        other => {
            return Err(Error::Precondition(format!(
                "enumeration needs a C3-cover or infinite-certified verdict, got {other:?}"
            )))
        }
    };
    let mut out = Enumeration { certificates: Vec::new(), skipped: Vec::new(), exhausted: false, steps: 0 };
    let mut seen = BTreeSet::new();
    while out.certificates.len() < count {
        if out.steps >= max_steps {
            out.exhausted = true;
            break;
        }
        let mut batch = Vec::new();
        while batch.len() < BATCH && out.steps < max_steps {
            let x0 = walk.next().expect("walks are infinite")?;
            batch.push((out.steps, x0));
            out.steps += 1;
        }
        let mut fresh = Vec::new();
        for (step, x0) in batch {
            match x0 {
                None => out.skipped.push(SkippedFibre { step, x0: None, reason: SkipReason::AtInfinity }),
                Some(x) if seen.insert(x.clone()) => fresh.push((step, x)),
                Some(_) => {}
            }
        }
        let results: Vec<_> = fresh.par_iter().map(|(step, x)| (*step, x.clone(), fibre_certificate(m, x))).collect();
        for (step, x, res) in results {
            if out.certificates.len() >= count {
                break;
            }
            let reason = match res {
                Err(Error::RamifiedFibre(_)) => SkipReason::Ramified,
                Err(e) => return Err(e),
                Ok(c) => match (&c.verdict, &c.evidence) {
                    (FibreVerdict::CyclicCubic, _) => {
                        out.certificates.push(c);
                        continue;
                    }
                    (FibreVerdict::Reducible, IrreducibilityEvidence::RationalRoot { root }) => {
                        SkipReason::Reducible { root: root.clone() }
                    }
                    (FibreVerdict::NonCyclicCubic, _) => SkipReason::NonCyclic,
                    _ => SkipReason::Undecided,
                },
            };
            out.skipped.push(SkippedFibre { step, x0: Some(x), reason });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::classify::{classify, SearchBudget};
    use crate::cyclic::fibre::recheck_certificate;
    use crate::parser::{parse_bivariate, parse_univariate};
    use crate::polyalg::rational::int;

    fn model(p: &str, q: &str) -> TrigonalModel {
        TrigonalModel::new(parse_univariate(p, 'x').unwrap(), parse_univariate(q, 'x').unwrap()).unwrap()
    }

    fn run(m: &TrigonalModel, n: usize) -> Enumeration {
        let r = classify(m, &SearchBudget::quick()).unwrap();
        let e = enumerate_cyclic_points(m, &r, n, 200).unwrap();
        for c in &e.certificates {
            assert!(recheck_certificate(m, c));
            assert_eq!(c.verdict, FibreVerdict::CyclicCubic);
        }
        let xs: BTreeSet<_> = e.certificates.iter().map(|c| c.x0.clone()).collect();
        assert_eq!(xs.len(), e.certificates.len());
        e
    }

    #[test]
    fn example1_five_points() {
        let g = "(27x^10 + x^3 - 16x + 16)";
        let m = model(&format!("-4{g}"), &format!("-16x^5{g}"));
        let e = run(&m, 5);
        assert_eq!(e.certificates.len(), 5);
        assert!(!e.exhausted);
        assert_eq!(e.certificates[0].x0, int(4));
        assert!(e
            .skipped
            .iter()
            .any(|s| s.x0 == Some(int(0)) && matches!(s.reason, SkipReason::Reducible { .. })));
    }

    #[test]
    fn c3_cover_three_points() {
        let f = parse_bivariate("y^3 - x y^2 - (x + 3) y - 1", 'x', 'y').unwrap();
        let m = TrigonalModel::from_cubic(&f).unwrap();
        let e = run(&m, 3);
        assert_eq!(e.certificates.len(), 3);
    }

    #[test]
    fn parabola_walk() {
        // w^2 = x
        let m = model("-9x - 3", "6x + 2");
        let e = run(&m, 3);
        assert_eq!(e.certificates.len(), 3);
        for c in &e.certificates {
            assert!(crate::polyalg::rational::is_square_rational(&c.x0).is_some());
        }
    }

    #[test]
    fn budget_exhaustion_is_partial() {
        let g = "(27x^10 + x^3 - 16x + 16)";
        let m = model(&format!("-4{g}"), &format!("-16x^5{g}"));
        let r = classify(&m, &SearchBudget::quick()).unwrap();
        let e = enumerate_cyclic_points(&m, &r, 100, 3).unwrap();
        assert!(e.exhausted);
        assert_eq!(e.steps, 3);
        assert!(e.certificates.len() < 3);
    }

    #[test]
    fn rejects_finite_verdict() {
        let m = model("-1", "x^3");
        let r = classify(&m, &SearchBudget::quick()).unwrap();
        assert!(enumerate_cyclic_points(&m, &r, 1, 10).is_err());
    }
}
