//! Scalar abstraction for every exact computation in this crate.
//!
//! All public type aliases at the crate root instantiate `Int` with
//! [`num_bigint::BigInt`], so nothing user-facing ever overflows. The
//! generic bound exists so that hot brute-force loops (residue scans,
//! test oracles) can run on `i64`/`i128` where the ranges are known.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// A signed exact integer scalar.
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + FromStr + From<i64> + ToPrimitive + 'static
{
}

impl<T> Int for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromStr + From<i64> + ToPrimitive + 'static
{
}

/// Shorthand for lifting small constants into any scalar type.
pub fn int<T: Int>(v: i64) -> T {
    T::from(v)
}

/// Least non-negative residue of `a` modulo `p` (`p > 0`).
pub fn mod_reduce<T: Int>(a: &T, p: &T) -> T {
    a.mod_floor(p)
}

/// gcd of absolute values; `gcd(0, 0) = 0`.
pub fn gcd_abs<T: Int>(a: &T, b: &T) -> T {
    a.gcd(b)
}
