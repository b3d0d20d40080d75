//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by poset, polynomial, complex, subdivision and toric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The cover relation contains a directed cycle.
    #[error("cover relation contains a cycle")]
    CycleDetected,
    /// An element id occurs twice.
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    /// A cover, carrier or face refers to an unknown id.
    #[error("unknown element id `{0}`")]
    UnknownId(String),
    /// A rank-dependent operation was applied to a poset without a rank function.
    #[error("poset is not graded")]
    NotGraded,
    /// The poset lacks a minimum or a maximum element.
    #[error("poset needs both a minimum and a maximum element")]
    RequiresBounds,
    /// The poset lacks a minimum element.
    #[error("poset needs a minimum element")]
    RequiresMin,
    /// The poset is not Eulerian.
    #[error("poset is not Eulerian")]
    NotEulerian,
    /// The poset is not lower Eulerian.
    #[error("poset is not lower Eulerian")]
    NotLowerEulerian,
    /// The semisuspension construction does not produce an Eulerian poset.
    #[error("poset is not near-Eulerian")]
    NotNearEulerian,
    /// Two elements have no least upper bound or no greatest lower bound.
    #[error("poset is not a lattice: `{0}` and `{1}` have no unique join or meet")]
    NotALattice(String, String),
    /// Flag vectors are limited to proper ranks 1..=62.
    #[error("rank {0} is too large for flag enumeration")]
    RankTooLarge(usize),
    /// An ab-polynomial has no expression in c = a+b and d = ab+ba.
    #[error("not expressible in c and d; residual {0}")]
    NotCdExpressible(String),
    /// A polynomial of degree above `n` cannot be reversed at `n`.
    #[error("degree {degree} exceeds reversal bound {bound}")]
    DegreeTooHigh {
        /// Degree of the polynomial.
        degree: usize,
        /// Requested reversal bound.
        bound: usize,
    },
    /// A face is not part of the complex or poset.
    #[error("face `{0}` not found")]
    FaceNotFound(String),
    /// The complex is not pure.
    #[error("complex is not pure")]
    NotPure,
    /// Argument outside the domain of a closed form or generator.
    #[error("domain error: {0}")]
    DomainError(String),
    /// A subdivision map violates its defining conditions.
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    /// A computation needing a validated map received one that failed validation.
    #[error("subdivision failed validation: {0}")]
    ValidationRequired(String),
    /// Two independent evaluations of the same quantity disagree.
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    /// An identity that holds by construction failed.
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    /// A sequence of elements is not a chain of the poset.
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
