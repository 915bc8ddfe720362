//! Elliptic curves over the rationals: group law, point search,
//! non-torsion certificates, and reduction of quartic models.

pub mod curve;
pub mod quartic;
pub mod search;

pub use curve::{ECPoint, LongWeierstrass, ShortTransform, WeierstrassCurve};
pub use quartic::{quartic_to_weierstrass, QuarticPoint, QuarticReduction};
pub use search::{
    certify_nontorsion, nagell_lutz_screen, search_points, NagellLutz, RankCertificate, RankVerdict, DEFAULT_DENOM,
    DEFAULT_HEIGHT,
};
