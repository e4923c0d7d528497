//! Exact calculus for Dehn-surgery slopes, lens spaces, two-bridge
//! links, rational tangles and Alexander polynomials, built around a
//! one-parameter family of knots in the Poincare homology sphere with
//! lens-space surgeries.
//!
//! Everything is integer-exact: no floating point appears anywhere.
//! The core is generic over the scalar type (any signed integer
//! implementing [`num::Int`]); the aliases below pin the public,
//! overflow-free `BigInt` instantiation used by the CLI and the
//! acceptance suite. `i64` instantiations of the same functions back
//! the brute-force test oracles.
//!
//! Modules:
//! * [`exact`] — rationals (with the slope `∞`), negative continued
//!   fractions, modular arithmetic;
//! * [`laurent`] — Laurent-polynomial algebra, torus-knot Alexander
//!   polynomials, reduction mod `t^p - 1`, the correction lift;
//! * [`lens`] — lens-space/two-bridge normalization and equivalence,
//!   congruence criteria for homology classes;
//! * [`seifert`] — tangle sums, pretzels, double-branched-cover
//!   classification, the tunnel-number gate analysis;
//! * [`surgery`] — slopes, slope distances, torus-knot surgeries;
//! * [`family`] — per-member reports and the census generator.

pub mod conventions;
pub mod error;
pub mod exact;
pub mod family;
pub mod jsonutil;
pub mod laurent;
pub mod lens;
pub mod num;
pub mod seifert;
pub mod surgery;

pub use error::{Error, Result};

/// The default exact scalar: arbitrary-precision integers.
pub type Z = num_bigint::BigInt;

pub type Rational = exact::Rational<Z>;
pub type ContinuedFraction = exact::ContinuedFraction<Z>;
pub type LaurentPoly = laurent::LaurentPoly<Z>;
pub type CyclicPoly = laurent::CyclicPoly<Z>;
pub type LensSpace = lens::LensSpace<Z>;
pub type TwoBridge = lens::TwoBridge<Z>;
pub type LensSum = lens::LensSum<Z>;
pub type HomologyClass = lens::HomologyClass<Z>;
pub type RationalTangle = seifert::RationalTangle<Z>;
pub type TangleSum = seifert::TangleSum<Z>;
pub type Pretzel = seifert::Pretzel<Z>;
pub type SeifertClass = seifert::SeifertClass<Z>;
pub type TunnelAnalysis = seifert::TunnelAnalysis<Z>;
pub type Slope = surgery::Slope<Z>;
pub type SurgeryResult = surgery::SurgeryResult<Z>;
pub type FamilyReport = family::FamilyReport<Z>;
