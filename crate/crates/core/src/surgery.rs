//! Slopes on the boundary torus, slope distances, and identification of
//! the integral surgeries on torus knots.

use std::fmt;
use std::str::FromStr;

use crate::conventions;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lens::{LensSpace, LensSum};
use crate::num::{mod_reduce, Int};

/// An unoriented slope `p·μ + q·λ` on the boundary torus, i.e. a
/// primitive class up to sign. Normalized with `q >= 0`, and `p >= 0`
/// when `q = 0`; the meridian is `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope<T: Int> {
    p: T,
    q: T,
}

impl<T: Int> Slope<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroSlope);
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::NonCoprime { what: "slope", a: p.to_string(), b: q.to_string() });
        }
        let flip = q.is_negative() || (q.is_zero() && p.is_negative());
        if flip {
            Ok(Self { p: -p, q: -q })
        } else {
            Ok(Self { p, q })
        }
    }

    pub fn meridian() -> Self {
        Self { p: T::one(), q: T::zero() }
    }

    pub fn longitude() -> Self {
        Self { p: T::zero(), q: T::one() }
    }

    pub fn integral(m: T) -> Self {
        Self::new(m, T::one()).expect("integral slopes are coprime")
    }

    pub fn mu_coeff(&self) -> &T {
        &self.p
    }

    pub fn lambda_coeff(&self) -> &T {
        &self.q
    }

    pub fn as_rational(&self) -> Rational<T> {
        Rational::new(self.p.clone(), self.q.clone()).expect("slopes are never 0/0")
    }

    /// JSON pair `[p, q]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(vec![
            crate::jsonutil::int_value(&self.p),
            crate::jsonutil::int_value(&self.q),
        ])
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("expected [p, q], got {v}")))?;
        Self::new(
            crate::jsonutil::int_from_value(&arr[0])?,
            crate::jsonutil::int_from_value(&arr[1])?,
        )
    }
}

impl<T: Int> fmt::Display for Slope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl<T: Int> fmt::Debug for Slope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for Slope<T> {
    type Err = Error;

    /// Parses `p/q` or a bare integer `m` (the framing `m/1`);
    /// `∞` is `1/0`.
    fn from_str(s: &str) -> Result<Self> {
        let r: Rational<T> = s.parse()?;
        Self::new(r.numer().clone(), r.denom().clone())
    }
}

/// Minimal geometric intersection number of two slopes:
/// `|p1 q2 - p2 q1|`. Zero exactly for equal unoriented slopes.
pub fn slope_distance<T: Int>(s1: &Slope<T>, s2: &Slope<T>) -> T {
    (s1.p.clone() * s2.q.clone() - s2.p.clone() * s1.q.clone()).abs()
}

/// Image of a slope under the involution reversing the longitude:
/// `p·μ + q·λ  ->  p·μ - q·λ`, normalized. The distance from a slope
/// `p·μ + q'·λ` to its image is `2pq'`.
pub fn involution_image<T: Int>(s: &Slope<T>) -> Slope<T> {
    Slope::new(s.p.clone(), -s.q.clone()).expect("negating a coordinate preserves primitivity")
}

/// Integral `m`-surgery on the unknot: the lens space `L(m, -1)`
/// (raw form; `m = 0` gives `S^1 x S^2`, `m = ±1` gives `S^3`).
pub fn unknot_surgery<T: Int>(m: T) -> LensSpace<T> {
    let (p, q) = conventions::unknot_surgery_raw(m);
    LensSpace::new(p, q).expect("(m, -1) is coprime")
}

/// What integral surgery on a torus knot produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryResult<T: Int> {
    /// A single lens space (raw form).
    Lens(LensSpace<T>),
    /// The reducible surgery at `m = ab`: a connected sum of two lens
    /// spaces.
    Sum(LensSum<T>),
    /// Any other integral slope: a small Seifert fibered space over the
    /// sphere with the recorded exceptional-fiber orders.
    NotLensIntegral { orders: Vec<T> },
}

impl<T: Int> SurgeryResult<T> {
    /// The result as a connected sum (a single lens space is the
    /// singleton sum); `None` for the non-lens case.
    pub fn as_sum(&self) -> Option<LensSum<T>> {
        match self {
            Self::Lens(l) => Some(LensSum::new([l.clone()])),
            Self::Sum(s) => Some(s.clone()),
            Self::NotLensIntegral { .. } => None,
        }
    }
}

impl<T: Int> fmt::Display for SurgeryResult<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lens(l) => write!(f, "{l}"),
            Self::Sum(s) => write!(f, "{s}"),
            Self::NotLensIntegral { orders } => {
                write!(f, "SFS over S^2 with fiber orders {{")?;
                for (i, o) in orders.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{o}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Identifies integral `m`-surgery on the `(a, b)`-torus knot.
///
/// * `a = 1` or `b = 1`: the unknot, so `L(m, -1)`.
/// * `m = ab`: the reducible surgery `L(a, b) # L(b, a)`.
/// * `|m - ab| = 1`: the lens space `L(m, -a^2 mod m)`. The sign of
///   `-a^2` is forced by two anchors: `m`-surgery on the unknot must be
///   `L(m, -1)`, and `p`-surgery on the `(3n+1, n)`-torus knot with
///   `p = 3n^2+n+1` must be `L(p, -3n+2)`; both are checked in tests.
/// * otherwise: a Seifert fibered space over `S^2` with exceptional
///   fiber orders `{a, b, |m - ab|}`, never a lens space.
pub fn torus_knot_integral_surgery<T: Int>(a: &T, b: &T, m: &T) -> Result<SurgeryResult<T>> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::OutOfRange {
            what: "torus_knot_integral_surgery",
            expected: "a, b >= 1",
            got: format!("({a}, {b})"),
        });
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NonCoprime {
            what: "torus_knot_integral_surgery",
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    if a.is_one() || b.is_one() {
        return Ok(SurgeryResult::Lens(unknot_surgery(m.clone())));
    }
    let ab = a.clone() * b.clone();
    let fiber = (m.clone() - ab).abs();
    if fiber.is_zero() {
        let sum = LensSum::new([
            LensSpace::new(a.clone(), b.clone())?,
            LensSpace::new(b.clone(), a.clone())?,
        ]);
        return Ok(SurgeryResult::Sum(sum));
    }
    if fiber.is_one() {
        let q = mod_reduce(&-(a.clone() * a.clone()), m);
        return Ok(SurgeryResult::Lens(LensSpace::new(m.clone(), q)?));
    }
    Ok(SurgeryResult::NotLensIntegral { orders: vec![a.clone(), b.clone(), fiber] })
}

/// Self-linking number of the dual of a positive `p`-surgery:
/// `-1/p ≡ (p-1)/p (mod 1)`.
pub fn dual_self_linking<T: Int>(p: &T) -> Result<Rational<T>> {
    if !p.is_positive() {
        return Err(Error::OutOfRange { what: "dual_self_linking", expected: "p >= 1", got: p.to_string() });
    }
    Rational::new(p.clone() - T::one(), p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Slope<i64>;

    fn slope(p: i64, q: i64) -> S {
        S::new(p, q).unwrap()
    }

    #[test]
    fn slope_normalization() {
        assert_eq!(slope(5, -1), slope(-5, 1));
        assert_eq!(slope(-1, 0), S::meridian());
        assert_eq!(slope(0, -1), S::longitude());
        assert!(S::new(0, 0).is_err());
        assert!(S::new(4, 2).is_err());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(slope_distance(&S::meridian(), &S::longitude()), 1);
        assert_eq!(slope_distance(&slope(7, 3), &slope(7, 3)), 0);
        // s = 5μ + λ against τ(s) = 5μ - λ: distance 2·5·1.
        let s = slope(5, 1);
        assert_eq!(slope_distance(&s, &involution_image(&s)), 10);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_image(&S::meridian()), S::meridian());
        assert_eq!(involution_image(&S::longitude()), S::longitude());
        let s = slope(5, 1);
        assert_eq!(involution_image(&involution_image(&s)), s);
    }

    #[test]
    fn distance_zero_iff_equal() {
        for p1 in -6i64..=6 {
            for q1 in 0i64..=6 {
                let Ok(s1) = S::new(p1, q1) else { continue };
                for p2 in -6i64..=6 {
                    for q2 in 0i64..=6 {
                        let Ok(s2) = S::new(p2, q2) else { continue };
                        assert_eq!(slope_distance(&s1, &s2) == 0, s1 == s2, "{s1} {s2}");
                        assert_eq!(slope_distance(&s1, &s2), slope_distance(&s2, &s1));
                    }
                }
            }
        }
    }

    #[test]
    fn unknot_surgery_examples() {
        assert_eq!(unknot_surgery(5i64).to_string(), "L(5,-1)");
        assert!(unknot_surgery(1i64).is_s3());
        assert!(unknot_surgery(-1i64).is_s3());
        assert!(unknot_surgery(0i64).is_s1_x_s2());
    }

    #[test]
    fn torus_surgery_unknot_branch() {
        // (4, 1, 5): the unknot branch, and -a^2 = -16 ≡ -1 (mod 5)
        // keeps the lens-branch formula consistent with it.
        let r = torus_knot_integral_surgery(&4i64, &1, &5).unwrap();
        assert_eq!(r, SurgeryResult::Lens(unknot_surgery(5)));
        for a in 1i64..=9 {
            for m in -8i64..=8 {
                assert_eq!(
                    torus_knot_integral_surgery(&a, &1, &m).unwrap(),
                    SurgeryResult::Lens(unknot_surgery(m)),
                );
            }
        }
    }

    #[test]
    fn torus_surgery_lens_branch() {
        // 15-surgery on T(7,2): -49 ≡ -4 (mod 15).
        let r = torus_knot_integral_surgery(&7i64, &2, &15).unwrap();
        let SurgeryResult::Lens(l) = &r else { panic!("expected lens, got {r}") };
        assert_eq!((l.p(), l.q()), (&15, &11));
        assert!(l.equivalent_oriented(&LensSpace::new(15, -4).unwrap()));
        // b^2 · q ≡ -1 (mod m): 4 · (-4) = -16 ≡ -1 (mod 15).
        assert_eq!((2 * 2 * -4i64).rem_euclid(15), 14);
    }

    #[test]
    fn torus_surgery_reducible_branch() {
        // 14-surgery on T(7,2) splits as L(7,2) # L(2,7).
        let r = torus_knot_integral_surgery(&7i64, &2, &14).unwrap();
        let expected: LensSum<i64> = "L(2,1) # L(7,2)".parse().unwrap();
        let SurgeryResult::Sum(s) = &r else { panic!("expected sum, got {r}") };
        assert!(s.sum_equivalent(&expected, true));
    }

    #[test]
    fn torus_surgery_generic_branch() {
        let r = torus_knot_integral_surgery(&3i64, &2, &11).unwrap();
        assert_eq!(r, SurgeryResult::NotLensIntegral { orders: vec![3, 2, 5] });
        assert!(torus_knot_integral_surgery(&4i64, &2, &9).is_err());
    }

    #[test]
    fn dual_self_linking_examples() {
        assert_eq!(dual_self_linking(&5i64).unwrap().to_string(), "4/5");
        assert_eq!(dual_self_linking(&1i64).unwrap().to_string(), "0/1");
        assert_eq!(dual_self_linking(&7i64).unwrap().to_string(), "6/7");
        assert!(dual_self_linking(&0i64).is_err());
    }

    #[test]
    fn slope_parse_roundtrip() {
        for s in ["5/1", "-5/1", "1/0", "0/1"] {
            let v: S = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("7".parse::<S>().unwrap(), slope(7, 1));
        assert_eq!("5/-1".parse::<S>().unwrap(), slope(-5, 1));
    }
}
