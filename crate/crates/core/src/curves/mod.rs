//! Curve models, genus via local ramification, rational maps, and genus
//! bounds.

pub mod bounds;
pub mod hyperelliptic;
pub mod maps;
pub mod ramification;
pub mod trigonal;

pub use bounds::{cs_bound, cs_check, triple_points_infeasible, weier_budget, CsReport, CsVerdict, WeierBudget};
pub use hyperelliptic::{genus_hyperelliptic, HyperellipticModel};
pub use maps::{verify_map, RationalMap};
pub use ramification::{
    genus_trigonal, local_ramification, ramification_profile, split_cluster, Location, Partition, Place,
    RamificationProfile, Valuations,
};
pub use trigonal::{IrreducibilityWitness, TrigonalModel};
