//! Error type shared by every module.

use thiserror::Error;

/// Everything that can go wrong in the exact calculus.
///
/// Each variant names the violated precondition so that callers (and the
/// CLI) can report domain errors verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A continued-fraction step required the reciprocal of zero.
    #[error("degenerate evaluation: reciprocal of zero at term index {index}")]
    DegenerateEvaluation { index: usize },

    /// A pair that must be coprime is not.
    #[error("{what}: ({a}, {b}) must be coprime")]
    NonCoprime { what: &'static str, a: String, b: String },

    /// `0/0` or another fraction with no value.
    #[error("invalid rational: 0/0 has no value")]
    ZeroOverZero,

    /// `∞` appeared where finite arithmetic was required.
    #[error("infinite operand: arithmetic on 1/0 is only defined for slope comparison")]
    InfiniteOperand,

    /// A modulus or size parameter was out of range.
    #[error("{what}: expected {expected}, got {got}")]
    OutOfRange { what: &'static str, expected: &'static str, got: String },

    /// A polynomial operation required a symmetric polynomial.
    #[error("asymmetric polynomial: coefficient({exp}) != coefficient({neg_exp})")]
    AsymmetricPolynomial { exp: i64, neg_exp: i64 },

    /// The zero polynomial has no degree/genus.
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    /// Correction lift requires the base degree to stay below the modulus.
    #[error("degree too large: max exponent {max_exp} exceeds (p-1)/2 = {bound} for p = {p}")]
    DegreeTooLarge { max_exp: i64, bound: i64, p: i64 },

    /// A value did not fit the expected syntactic shape.
    #[error("parse error: {0}")]
    Parse(String),

    /// The slope (0, 0) does not exist.
    #[error("invalid slope: (0, 0) is not a slope")]
    ZeroSlope,

    /// A tangle that must be an integer reciprocal 1/x is not.
    #[error("tangle {0} is not an integer reciprocal 1/x")]
    NotReciprocalTangle(String),

    /// An operation that requires a knot received a degenerate link.
    #[error("{0} is a degenerate (non-knot) value")]
    DegenerateLink(String),

    /// A quantity exceeded what can be materialized in memory.
    #[error("{what} too large to materialize: {got}")]
    TooLarge { what: &'static str, got: String },
}

pub type Result<T> = std::result::Result<T, Error>;
