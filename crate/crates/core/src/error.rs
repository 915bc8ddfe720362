use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("bad prime {prime}: {reason}")]
    BadPrime { prime: u64, reason: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable '{variable}' at position {position}")]
    UnknownVariable { variable: char, position: usize },
    #[error("exponent {exponent} at position {position} exceeds 10000")]
    ExponentOverflow { exponent: String, position: usize },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("cubic discriminant vanishes identically")]
    ZeroDiscriminant,
    #[error("model is not of the form y^3 + p(x) y + q(x)")]
    NotTrigonal,
    #[error("ramification analysis did not terminate: {0}")]
    RamificationDepth(String),
    #[error("map is not a morphism: target equation does not vanish on the source")]
    NotAMorphism,
    #[error("map degree undefined: {0}")]
    DegreeUndefined(String),
    #[error("point is not on the curve")]
    OffCurve,
    #[error("curve is singular")]
    SingularCurve,
    #[error("no usable rational point: {0}")]
    NoRationalPoint(String),
    #[error("fibre over {0} is ramified (discriminant vanishes)")]
    RamifiedFibre(String),
    #[error("degenerate elimination: {0}")]
    DegenerateElimination(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Errors that signal a degenerate computation rather than bad input.
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::ZeroDiscriminant
                | Error::RamificationDepth(_)
                | Error::SingularCurve
                | Error::RamifiedFibre(_)
                | Error::DegenerateElimination(_)
        )
    }
}
