//! Discriminant curves of degree-3 maps and cyclic cubic fibres.
//!
//! For `y^3 + p y + q` with discriminant `disc = s * S * C^2` (`S` the odd
//! part), the fibre over `x0` has square discriminant exactly when
//! `w^2 = c S(x0)` has a rational solution, with `c` the square class of
//! `s`. Irreducible fibres with square discriminant are cyclic cubic fields.

pub mod classify;
pub mod conic;
pub mod disc_curve;
pub mod enumerate;
pub mod fibre;
pub mod punctures;

pub use classify::{classify, ClassificationReport, DiscReduction, Parametrization, SearchBudget, Verdict, Witness};
pub use disc_curve::{discriminant_curve, DiscShape, DiscriminantCurve};
pub use enumerate::{enumerate_cyclic_points, Enumeration};
pub use fibre::{fibre_certificate, recheck_certificate, CubicFieldCertificate, FibreVerdict, IrreducibilityEvidence};
pub use punctures::{puncture_report, Puncture, PunctureReport, PunctureVerdict};
