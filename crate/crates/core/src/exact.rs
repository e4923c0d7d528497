//! Exact integer, rational, continued-fraction and modular arithmetic.
//!
//! Everything here is total and allocation-light; no floating point
//! appears anywhere in this crate. The value `∞` is modeled as the
//! canonical fraction `1/0` and is legal only where a surgery slope is
//! expected; finite arithmetic on `∞` is an error, never a silent value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::{mod_reduce, Int};

/// An exact rational number `p/q`, stored reduced with `q >= 0`.
///
/// `∞ = 1/0` is permitted (it is the slope of the empty plat and the
/// meridian); `0/0` is rejected at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational<T: Int> {
    numer: T,
    denom: T,
}

impl<T: Int> Rational<T> {
    /// Builds `p/q` in canonical form: reduced, `q > 0` for finite
    /// values, `1/0` for the infinite slope.
    pub fn new(numer: T, denom: T) -> Result<Self> {
        if numer.is_zero() && denom.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if denom.is_zero() {
            return Ok(Self { numer: T::one(), denom: T::zero() });
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = (numer / g.clone(), denom / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok(Self { numer: n, denom: d })
    }

    pub fn from_integer(n: T) -> Self {
        Self { numer: n, denom: T::one() }
    }

    pub fn infinity() -> Self {
        Self { numer: T::one(), denom: T::zero() }
    }

    pub fn zero() -> Self {
        Self { numer: T::zero(), denom: T::one() }
    }

    pub fn numer(&self) -> &T {
        &self.numer
    }

    pub fn denom(&self) -> &T {
        &self.denom
    }

    pub fn is_infinite(&self) -> bool {
        self.denom.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// Reciprocal as a slope value: `0 ↦ ∞` and `∞ ↦ 0`. Total.
    pub fn reciprocal(&self) -> Self {
        if self.numer.is_negative() {
            Self { numer: -self.denom.clone(), denom: -self.numer.clone() }
        } else {
            Self { numer: self.denom.clone(), denom: self.numer.clone() }
        }
    }

    pub fn neg(&self) -> Self {
        Self { numer: -self.numer.clone(), denom: self.denom.clone() }
    }

    fn finite(&self) -> Result<()> {
        if self.is_infinite() {
            Err(Error::InfiniteOperand)
        } else {
            Ok(())
        }
    }

    /// Exact sum; errors on an infinite operand.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.finite()?;
        other.finite()?;
        Self::new(
            self.numer.clone() * other.denom.clone() + other.numer.clone() * self.denom.clone(),
            self.denom.clone() * other.denom.clone(),
        )
    }

    /// Exact difference; errors on an infinite operand.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// Exact product; errors on an infinite operand.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.finite()?;
        other.finite()?;
        Self::new(
            self.numer.clone() * other.numer.clone(),
            self.denom.clone() * other.denom.clone(),
        )
    }
}

impl<T: Int> PartialOrd for Rational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Int> Ord for Rational<T> {
    /// Total order with `∞` above every finite value.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            (false, false) => {
                let lhs = self.numer.clone() * other.denom.clone();
                let rhs = other.numer.clone() * self.denom.clone();
                lhs.cmp(&rhs)
            }
        }
    }
}

impl<T: Int> fmt::Display for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl<T: Int> fmt::Debug for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for Rational<T>
where
    T: FromStr,
{
    type Err = Error;

    /// Parses `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| -> Result<T> {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

/// A negative continued fraction `[x_1, x_2, ..., x_n]` standing for
/// `x_1 - 1/(x_2 - 1/(... - 1/x_n))`. The empty word is the empty plat
/// and evaluates to `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction<T: Int>(pub Vec<T>);

impl<T: Int> ContinuedFraction<T> {
    pub fn eval(&self) -> Result<Rational<T>> {
        cf_eval(&self.0)
    }
}

impl<T: Int> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Evaluates the negative continued fraction exactly.
///
/// Working right to left with the running value as a reduced fraction,
/// every step forms `x - 1/v`. The empty suffix has value `∞` (whose
/// reciprocal is `0`); a zero intermediate value where a reciprocal is
/// required is a reported [`Error::DegenerateEvaluation`], never a
/// silent result.
pub fn cf_eval<T: Int>(terms: &[T]) -> Result<Rational<T>> {
    // Value of the suffix as n/d; the empty suffix is 1/0 = ∞.
    let mut n = T::one();
    let mut d = T::zero();
    for (i, x) in terms.iter().enumerate().rev() {
        if n.is_zero() {
            return Err(Error::DegenerateEvaluation { index: i });
        }
        // x - d/n = (x*n - d) / n
        let new_n = x.clone() * n.clone() - d;
        d = n;
        n = new_n;
        let g = n.gcd(&d);
        if !g.is_zero() && !g.is_one() {
            n = n / g.clone();
            d = d / g;
        }
    }
    Rational::new(n, d)
}

/// Expands `p/q` into the canonical negative continued fraction.
///
/// Convention (fixed for golden tests): the first term is the value's
/// floor and every later term is `<= -2`; integers expand to a single
/// term and `±1/0` to the empty word. The round trip
/// `cf_eval(cf_expand(p, q)) = p/q` is exact.
pub fn cf_expand<T: Int>(p: T, q: T) -> Result<Vec<T>> {
    if q.is_zero() {
        if p.clone().abs().is_one() {
            return Ok(Vec::new());
        }
        return Err(Error::OutOfRange {
            what: "cf_expand",
            expected: "q != 0 (or p = ±1 for the empty plat)",
            got: format!("{p}/{q}"),
        });
    }
    let g = p.gcd(&q);
    if !g.is_one() {
        return Err(Error::NonCoprime { what: "cf_expand", a: p.to_string(), b: q.to_string() });
    }
    let (mut n, mut d) = if q.is_negative() { (-p, -q) } else { (p, q) };
    let mut terms = Vec::new();
    loop {
        let (quot, rem) = n.div_mod_floor(&d);
        terms.push(quot);
        if rem.is_zero() {
            return Ok(terms);
        }
        // n/d = quot + rem/d = quot - 1/(-d/rem) with 0 < rem < d, so the
        // tail value -d/rem is < -1 and every later floor lands <= -2.
        n = -d;
        d = rem;
    }
}

/// All residues `k` in `Z/p` with `A k^2 + B k + C ≡ 0 (mod p)`,
/// found by exhaustive scan. `p >= 1`; mod 1 everything vanishes.
pub fn quadratic_solutions<T: Int>(a: &T, b: &T, c: &T, p: &T) -> Result<Vec<T>> {
    if !p.is_positive() {
        return Err(Error::OutOfRange {
            what: "quadratic_solutions",
            expected: "p >= 1",
            got: p.to_string(),
        });
    }
    let mut out = Vec::new();
    let mut k = T::zero();
    while k < *p {
        let v = a.clone() * k.clone() * k.clone() + b.clone() * k.clone() + c.clone();
        if mod_reduce(&v, p).is_zero() {
            out.push(k.clone());
        }
        k = k + T::one();
    }
    Ok(out)
}

/// The inverse of `a` in `Z/p`, when `gcd(a, p) = 1`; absence is a
/// value, not an error. `p >= 1` (mod 1 the inverse is the residue 0).
pub fn mod_inverse<T: Int>(a: &T, p: &T) -> Result<Option<T>> {
    if !p.is_positive() {
        return Err(Error::OutOfRange { what: "mod_inverse", expected: "p >= 1", got: p.to_string() });
    }
    if p.is_one() {
        return Ok(Some(T::zero()));
    }
    // Extended Euclid on (a mod p, p).
    let mut r0 = mod_reduce(a, p);
    let mut r1 = p.clone();
    let mut s0 = T::one();
    let mut s1 = T::zero();
    while !r1.is_zero() {
        let quot = r0.div_floor(&r1);
        let r2 = r0 - quot.clone() * r1.clone();
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = s0 - quot * s1.clone();
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.is_one() {
        Ok(Some(mod_reduce(&s0, p)))
    } else {
        Ok(None)
    }
}
