//! Exact Laurent-polynomial algebra over the integers.
//!
//! Covers the Alexander polynomials of torus knots, the alternating
//! `{0, ±1}` coefficient form shared by all L-space surgery knots, the
//! reduction modulo `t^p - 1`, and the degree-`(p+1)/2` correction lift
//! that produces the family's polynomials from their companions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;


use crate::error::{Error, Result};
use crate::num::{int, Int};

/// Integer Laurent polynomial, stored as a sparse map from exponent to
/// nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly<T: Int> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Int> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    /// The variable `t`.
    pub fn variable() -> Self {
        Self::monomial(1, T::one())
    }

    /// `coeff * t^exp`; the zero monomial collapses to the zero polynomial.
    pub fn monomial(exp: i64, coeff: T) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates
    /// and pruning zeros.
    pub fn from_pairs<I: IntoIterator<Item = (i64, T)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in pairs {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.coeffs.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Width of the exponent support; 0 for monomials and the zero polynomial.
    pub fn degree_span(&self) -> i64 {
        match (self.max_exp(), self.min_exp()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }

    /// `coefficient(i) = coefficient(-i)` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    /// Exact value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> T {
        self.coeffs.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Pairs `(exponent, coefficient)` in descending exponent order —
    /// the same order as the canonical text form.
    pub fn to_pairs(&self) -> Vec<(i64, T)> {
        self.coeffs.iter().rev().map(|(e, c)| (*e, c.clone())).collect()
    }

    /// Multiplies every exponent's term by `t^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect() }
    }

    /// JSON array-of-pairs form `[[exp, coeff], ...]`, descending
    /// exponent like the text form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(
            self.to_pairs()
                .into_iter()
                .map(|(e, c)| {
                    serde_json::Value::from(vec![
                        serde_json::Value::from(e),
                        crate::jsonutil::int_value(&c),
                    ])
                })
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected pair array, got {v}")))?;
        let mut poly = Self::zero();
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse(format!("expected [exp, coeff], got {pair}")))?;
            let exp = pair[0]
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("bad exponent {}", pair[0])))?;
            poly.add_term(exp, crate::jsonutil::int_from_value(&pair[1])?);
        }
        Ok(poly)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }
}

impl<T: Int> std::ops::Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Int> std::ops::Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Int> std::ops::Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<T: Int> std::ops::Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Int> fmt::Display for LaurentPoly<T> {
    /// Canonical text form: terms sorted by descending exponent,
    /// e.g. `t^3 - t^2 + 1 - t^-2 + t^-3` or `3*t^2 - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if *exp == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl<T: Int> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for LaurentPoly<T> {
    type Err = Error;

    /// Parses the canonical text form (and minor variants such as a
    /// missing `*` between coefficient and `t`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // Split into signed chunks at top-level +/-; a sign directly after
        // '^' belongs to an exponent, not to a new term.
        let mut chunks: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev_significant = None::<char>;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev_significant != Some('^') && !cur.trim().is_empty() {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            if !ch.is_whitespace() {
                prev_significant = Some(ch);
            }
        }
        chunks.push(cur);

        let mut poly = Self::zero();
        for chunk in chunks {
            let term: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                continue;
            }
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, term.strip_prefix('+').unwrap_or(&term)),
            };
            let parse_int = |txt: &str| -> Result<T> {
                txt.parse::<T>().map_err(|_| Error::Parse(format!("bad integer {txt:?} in term {term:?}")))
            };
            let (exp, coeff) = match body.split_once('t') {
                None => (0i64, parse_int(body)?),
                Some((coeff_txt, exp_txt)) => {
                    let coeff_txt = coeff_txt.strip_suffix('*').unwrap_or(coeff_txt);
                    let coeff =
                        if coeff_txt.is_empty() { T::one() } else { parse_int(coeff_txt)? };
                    let exp = match exp_txt.strip_prefix('^') {
                        Some(e) => e
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent {e:?} in term {term:?}")))?,
                        None if exp_txt.is_empty() => 1,
                        None => {
                            return Err(Error::Parse(format!("unexpected {exp_txt:?} after t in {term:?}")))
                        }
                    };
                    (exp, coeff)
                }
            };
            poly.add_term(exp, int::<T>(sign) * coeff);
        }
        Ok(poly)
    }
}

/// Residue-indexed coefficients of a Laurent polynomial reduced
/// modulo `t^p - 1`.
///
/// Coefficients are stored at indices `0..p`. For odd `p`, display uses
/// the symmetric representatives `-(p-1)/2 ..= (p-1)/2`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicPoly<T: Int> {
    modulus: i64,
    coeffs: Vec<T>,
}

impl<T: Int> CyclicPoly<T> {
    pub fn new(modulus: i64, coeffs: Vec<T>) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::OutOfRange {
                what: "cyclic modulus",
                expected: "p >= 1",
                got: modulus.to_string(),
            });
        }
        if coeffs.len() as i64 != modulus {
            return Err(Error::OutOfRange {
                what: "cyclic coefficients",
                expected: "exactly p entries",
                got: coeffs.len().to_string(),
            });
        }
        Ok(Self { modulus, coeffs })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Coefficient at residue `i` (any representative).
    pub fn coeff(&self, i: i64) -> &T {
        &self.coeffs[i.rem_euclid(self.modulus) as usize]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The polynomial on the display representatives: symmetric ones for
    /// odd `p`, `0..p` otherwise.
    pub fn representative_poly(&self) -> LaurentPoly<T> {
        let p = self.modulus;
        let lo = if p % 2 == 1 { -(p - 1) / 2 } else { 0 };
        let hi = if p % 2 == 1 { (p - 1) / 2 } else { p - 1 };
        LaurentPoly::from_pairs((lo..=hi).map(|e| (e, self.coeff(e).clone())))
    }
}

impl<T: Int> fmt::Display for CyclicPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod t^{} - 1)", self.representative_poly(), self.modulus)
    }
}

impl<T: Int> fmt::Debug for CyclicPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact quotient of a dense ascending-coefficient polynomial by
/// `t^k - 1`; panics if the division is not exact (the callers only
/// divide when divisibility is a theorem, so a remainder is a bug).
fn div_exact_by_tk_minus_one<T: Int>(f: &mut [T], k: usize) -> Vec<T> {
    let len = f.len();
    assert!(k >= 1 && len >= k);
    let mut q = vec![T::zero(); len - k];
    for i in (k..len).rev() {
        let c = std::mem::replace(&mut f[i], T::zero());
        if !c.is_zero() {
            f[i - k] = f[i - k].clone() + c.clone();
            q[i - k] = c;
        }
    }
    assert!(f[..k].iter().all(|c| c.is_zero()), "inexact division by t^{k} - 1");
    q
}

/// Symmetrized Alexander polynomial of the `(a, b)`-torus knot:
/// `(t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1))` recentered so that
/// `coefficient(i) = coefficient(-i)`. The degree span is `(a-1)(b-1)`.
pub fn torus_alexander<T: Int>(a: &T, b: &T) -> Result<LaurentPoly<T>> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::OutOfRange {
            what: "torus_alexander",
            expected: "a, b >= 1",
            got: format!("({a}, {b})"),
        });
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NonCoprime { what: "torus_alexander", a: a.to_string(), b: b.to_string() });
    }
    let (au, bu) = match (a.to_usize(), b.to_usize()) {
        (Some(au), Some(bu)) if au.checked_mul(bu).map_or(false, |ab| ab < 1 << 28) => (au, bu),
        _ => return Err(Error::TooLarge { what: "torus knot parameters", got: format!("({a}, {b})") }),
    };

    // Numerator (t^{ab} - 1)(t - 1) as a dense ascending vector.
    let ab = au * bu;
    let mut f = vec![T::zero(); ab + 2];
    for (e, s) in [(ab + 1, 1i64), (ab, -1), (1, -1), (0, 1)] {
        f[e] = f[e].clone() + int::<T>(s);
    }
    let mut g = div_exact_by_tk_minus_one(&mut f, au);
    let h = div_exact_by_tk_minus_one(&mut g, bu);

    let span = (au - 1) * (bu - 1);
    debug_assert_eq!(h.len(), span + 1);
    // (a-1)(b-1) is even for coprime a, b; asserted, not assumed.
    assert!(span % 2 == 0, "odd degree span {span} for coprime ({a}, {b})");
    let half = (span / 2) as i64;
    Ok(LaurentPoly::from_pairs(
        h.into_iter().enumerate().map(|(e, c)| (e as i64 - half, c)),
    ))
}

/// Half the degree span of a symmetric Alexander polynomial — the
/// Seifert genus when the knot is fibered.
pub fn genus_from_alexander<T: Int>(poly: &LaurentPoly<T>) -> Result<i64> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    symmetry_check(poly)?;
    Ok(poly.max_exp().expect("nonzero"))
}

fn symmetry_check<T: Int>(poly: &LaurentPoly<T>) -> Result<()> {
    for (e, c) in poly.iter() {
        if poly.coeff(-e) != *c {
            return Err(Error::AsymmetricPolynomial { exp: e, neg_exp: -e });
        }
    }
    Ok(())
}

/// Why a polynomial fails [`lspace_form_check`]; the first violated
/// condition is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LSpaceFormViolation {
    ZeroPolynomial,
    NotSymmetric,
    CoefficientNotUnit { exp: i64 },
    TopCoefficientNegative,
    SignDoesNotAlternate { exp: i64 },
    ConstantTermZero,
}

impl fmt::Display for LSpaceFormViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroPolynomial => write!(f, "zero polynomial"),
            Self::NotSymmetric => write!(f, "not symmetric"),
            Self::CoefficientNotUnit { exp } => write!(f, "coefficient at t^{exp} not in {{0, ±1}}"),
            Self::TopCoefficientNegative => write!(f, "top coefficient is not +1"),
            Self::SignDoesNotAlternate { exp } => write!(f, "sign fails to alternate at t^{exp}"),
            Self::ConstantTermZero => write!(f, "constant term is zero"),
        }
    }
}

/// Outcome of [`lspace_form_check`]: on success, `exponents` is the
/// increasing list `n_1 < ... < n_k` of positive exponents carrying
/// nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSpaceForm {
    pub ok: bool,
    pub exponents: Vec<i64>,
    pub violation: Option<LSpaceFormViolation>,
}

impl LSpaceForm {
    fn fail(violation: LSpaceFormViolation) -> Self {
        Self { ok: false, exponents: Vec::new(), violation: Some(violation) }
    }
}

/// Checks the alternating unit-coefficient form
/// `(-1)^k + Σ_{j=1..k} (-1)^{k-j} (t^{n_j} + t^{-n_j})`:
/// symmetric, all coefficients in `{0, ±1}`, top coefficient `+1`, and
/// the nonzero coefficients alternate in sign from the top exponent
/// down to (and including) exponent zero.
pub fn lspace_form_check<T: Int>(poly: &LaurentPoly<T>) -> LSpaceForm {
    if poly.is_zero() {
        return LSpaceForm::fail(LSpaceFormViolation::ZeroPolynomial);
    }
    if !poly.is_symmetric() {
        return LSpaceForm::fail(LSpaceFormViolation::NotSymmetric);
    }
    for (e, c) in poly.iter() {
        if !c.abs().is_one() {
            return LSpaceForm::fail(LSpaceFormViolation::CoefficientNotUnit { exp: e });
        }
    }
    let top = poly.max_exp().expect("nonzero");
    if !poly.coeff(top).is_one() {
        return LSpaceForm::fail(LSpaceFormViolation::TopCoefficientNegative);
    }
    let nonneg: Vec<(i64, T)> =
        poly.iter().rev().filter(|(e, _)| *e >= 0).map(|(e, c)| (e, c.clone())).collect();
    let mut expected_positive = true;
    for (e, c) in &nonneg {
        if c.is_positive() != expected_positive {
            return LSpaceForm::fail(LSpaceFormViolation::SignDoesNotAlternate { exp: *e });
        }
        expected_positive = !expected_positive;
    }
    if nonneg.last().map(|(e, _)| *e) != Some(0) {
        return LSpaceForm::fail(LSpaceFormViolation::ConstantTermZero);
    }
    let exponents = nonneg.iter().rev().map(|(e, _)| *e).filter(|e| *e > 0).collect();
    LSpaceForm { ok: true, exponents, violation: None }
}

/// Reduction modulo `t^p - 1`: residue coefficient
/// `ã_i = Σ_{j ≡ i (mod p)} a_j`.
pub fn cyclic_reduce<T: Int>(poly: &LaurentPoly<T>, p: i64) -> Result<CyclicPoly<T>> {
    if p < 1 {
        return Err(Error::OutOfRange { what: "cyclic_reduce", expected: "p >= 1", got: p.to_string() });
    }
    let mut coeffs = vec![T::zero(); p as usize];
    for (e, c) in poly.iter() {
        let i = e.rem_euclid(p) as usize;
        coeffs[i] = coeffs[i].clone() + c.clone();
    }
    CyclicPoly::new(p, coeffs)
}

/// The large-surgery correction:
/// `base - (t^{(p-1)/2} + t^{-(p-1)/2}) + (t^{(p+1)/2} + t^{-(p+1)/2})`.
///
/// Requires odd `p >= 3` and a symmetric base with max exponent at most
/// `(p-1)/2`; the result then has max exponent exactly `(p+1)/2`, and
/// its value at `t = 1` equals the base's (the four correction terms
/// cancel there).
pub fn correction_lift<T: Int>(base: &LaurentPoly<T>, p: i64) -> Result<LaurentPoly<T>> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::OutOfRange {
            what: "correction_lift",
            expected: "odd p >= 3",
            got: p.to_string(),
        });
    }
    symmetry_check(base)?;
    let bound = (p - 1) / 2;
    if let Some(max) = base.max_exp() {
        if max > bound {
            return Err(Error::DegreeTooLarge { max_exp: max, bound, p });
        }
    }
    let mut out = base.clone();
    for (exp, sign) in [(bound, -1i64), (-bound, -1), (bound + 1, 1), (-bound - 1, 1)] {
        out = &out + &LaurentPoly::monomial(exp, int::<T>(sign));
    }
    debug_assert_eq!(out.max_exp(), Some((p + 1) / 2));
    Ok(out)
}

/// Coefficient constraints satisfied by any reduced polynomial of an
/// L-space surgery knot: every `ã_i ∈ {0, ±1, 2}`, and `ã_i = 2` only
/// at `i = p/2` with `p` even.
pub fn tilde_constraints_check<T: Int>(c: &CyclicPoly<T>) -> bool {
    let p = c.modulus();
    let two = int::<T>(2);
    c.coeffs().iter().enumerate().all(|(i, v)| {
        if v.is_zero() || v.abs().is_one() {
            true
        } else if *v == two {
            p % 2 == 0 && i as i64 == p / 2
        } else {
            false
        }
    })
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;

    type P = LaurentPoly<i64>;

    fn poly(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn ring_op_examples() {
        let t = P::variable();
        let one = P::one();
        // (t + 1)(t - 1) = t^2 - 1
        assert_eq!(&(&t + &one) * &(&t - &one), poly("t^2 - 1"));
        // a + 0 = a
        let a = poly("t^3 - 2*t + 5");
        assert_eq!(&a + &P::zero(), a);
        // (t - 1 + t^-1)^2 by direct convolution
        let trefoil = poly("t - 1 + t^-1");
        assert_eq!(&trefoil * &trefoil, poly("t^2 - 2*t + 3 - 2*t^-1 + t^-2"));
        // cancellation prunes to the zero polynomial
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_canonical_form() {
        let p = poly("t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(p.to_string(), "t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(poly("-3*t^2 + t - 4").to_string(), "-3*t^2 + t - 4");
        assert_eq!(P::monomial(-1, -1).to_string(), "-t^-1");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "1", "-1", "t", "-t^-1", "t^3 - t^2 + 1 - t^-2 + t^-3", "5*t^2 + 2*t - 7"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p, "{s}");
        }
        // merging of repeated exponents
        assert_eq!(poly("t + t - 2*t"), P::zero());
    }

    #[test]
    fn torus_alexander_examples() {
        assert_eq!(torus_alexander(&2i64, &3).unwrap(), poly("t - 1 + t^-1"));
        assert_eq!(torus_alexander(&9i64, &1).unwrap(), P::one());
        assert_eq!(torus_alexander(&4i64, &1).unwrap(), P::one());
        assert_eq!(
            torus_alexander(&2i64, &5).unwrap(),
            poly("t^2 - t + 1 - t^-1 + t^-2")
        );
        assert!(torus_alexander(&4i64, &2).is_err());
        assert!(torus_alexander(&0i64, &1).is_err());
    }

    #[test]
    fn torus_alexander_symmetry_degree_eval() {
        for a in 2i64..=12 {
            for b in 2i64..=12 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let d = torus_alexander(&a, &b).unwrap();
                assert!(d.is_symmetric(), "({a},{b})");
                assert_eq!(d.max_exp(), Some((a - 1) * (b - 1) / 2), "({a},{b})");
                assert_eq!(d.eval_at_one(), 1, "({a},{b})");
            }
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_from_alexander(&poly("t - 1 + t^-1")).unwrap(), 1);
        assert_eq!(genus_from_alexander(&P::one()).unwrap(), 0);
        assert_eq!(genus_from_alexander(&poly("t^3 - t^2 + 1 - t^-2 + t^-3")).unwrap(), 3);
        assert!(matches!(genus_from_alexander(&P::zero()), Err(Error::ZeroPolynomial)));
        assert!(matches!(
            genus_from_alexander(&poly("t^2 + 1")),
            Err(Error::AsymmetricPolynomial { .. })
        ));
    }

    #[test]
    fn lspace_form_examples() {
        let r = lspace_form_check(&poly("t - 1 + t^-1"));
        assert!(r.ok);
        assert_eq!(r.exponents, vec![1]);

        let r = lspace_form_check(&poly("t^3 - t^2 + 1 - t^-2 + t^-3"));
        assert!(r.ok);
        assert_eq!(r.exponents, vec![2, 3]);

        let r = lspace_form_check(&poly("t^2 - 3 + t^-2"));
        assert!(!r.ok);
        assert_eq!(r.violation, Some(LSpaceFormViolation::CoefficientNotUnit { exp: 0 }));

        let r = lspace_form_check(&P::one());
        assert!(r.ok);
        assert!(r.exponents.is_empty());

        // symmetric, units, top +1, but consecutive same-sign entries
        let r = lspace_form_check(&poly("t^2 + t + 1 + t^-1 + t^-2"));
        assert!(!r.ok);
        assert_eq!(r.violation, Some(LSpaceFormViolation::SignDoesNotAlternate { exp: 1 }));

        // missing constant term: t - t^-1 is asymmetric; use t^2 - t ... instead
        let r = lspace_form_check(&poly("t + t^-1"));
        assert!(!r.ok);
        assert_eq!(r.violation, Some(LSpaceFormViolation::ConstantTermZero));

        let r = lspace_form_check(&poly("-t + 1 - t^-1"));
        assert!(!r.ok);
        assert_eq!(r.violation, Some(LSpaceFormViolation::TopCoefficientNegative));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let dk1 = poly("t^3 - t^2 + 1 - t^-2 + t^-3");
        let r = cyclic_reduce(&dk1, 5).unwrap();
        assert_eq!(r.coeffs(), &[1, 0, 0, 0, 0]);
        let unknot = torus_alexander(&4i64, &1).unwrap();
        assert_eq!(r, cyclic_reduce(&unknot, 5).unwrap());

        assert_eq!(cyclic_reduce(&P::one(), 7).unwrap().coeffs(), &[1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(
            cyclic_reduce(&P::monomial(7, 1), 7).unwrap().coeffs(),
            &[1, 0, 0, 0, 0, 0, 0]
        );
        assert!(cyclic_reduce(&P::one(), 0).is_err());
    }

    #[test]
    fn correction_lift_examples() {
        assert_eq!(correction_lift(&P::one(), 5).unwrap(), poly("t^3 - t^2 + 1 - t^-2 + t^-3"));
        assert_eq!(
            correction_lift(&poly("t - 1 + t^-1"), 5).unwrap(),
            poly("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3")
        );
        assert!(correction_lift(&P::one(), 4).is_err());
        assert!(correction_lift(&P::one(), 1).is_err());
        assert!(matches!(
            correction_lift(&poly("t^3 + 1 + t^-3"), 5),
            Err(Error::DegreeTooLarge { .. })
        ));
        assert!(correction_lift(&poly("t^2 + 1"), 7).is_err());
    }

    #[test]
    fn correction_lift_preserves_value_at_one() {
        for p in [3i64, 5, 7, 101] {
            let base = torus_alexander(&2i64, &3).unwrap();
            if base.max_exp().unwrap() <= (p - 1) / 2 {
                let lifted = correction_lift(&base, p).unwrap();
                assert_eq!(lifted.eval_at_one(), base.eval_at_one());
                assert_eq!(lifted.max_exp(), Some((p + 1) / 2));
            }
        }
    }

    #[test]
    fn correction_terms_vanish_mod_tp_minus_one() {
        // The lift only changes the polynomial by terms that are
        // congruent to zero modulo t^p - 1.
        for p in (3i64..=101).step_by(2) {
            for base in [
                P::one(),
                poly("t - 1 + t^-1"),
                P::from_pairs((-(p - 1) / 2..=(p - 1) / 2).map(|e| (e, e % 3 - 1))),
            ] {
                let base = if base.is_symmetric() {
                    base
                } else {
                    &base + &P::from_pairs(base.iter().map(|(e, c)| (-e, c.clone())))
                };
                let lifted = correction_lift(&base, p).unwrap();
                assert_eq!(
                    cyclic_reduce(&lifted, p).unwrap(),
                    cyclic_reduce(&base, p).unwrap(),
                    "p={p}"
                );
            }
        }
    }

    #[test]
    fn tilde_constraint_examples() {
        let dk1 = correction_lift(&P::one(), 5).unwrap();
        assert!(tilde_constraints_check(&cyclic_reduce(&dk1, 5).unwrap()));
        assert!(!tilde_constraints_check(&CyclicPoly::new(3, vec![0i64, 3, 0]).unwrap()));
        // p odd forbids the coefficient 2 anywhere
        assert!(!tilde_constraints_check(&CyclicPoly::new(3, vec![0i64, 2, 0]).unwrap()));
        // p even allows 2 exactly at p/2
        assert!(tilde_constraints_check(&CyclicPoly::new(4, vec![1i64, 0, 2, 0]).unwrap()));
        assert!(!tilde_constraints_check(&CyclicPoly::new(4, vec![2i64, 0, 1, 0]).unwrap()));
    }

    #[test]
    fn cyclic_display_uses_symmetric_representatives() {
        let c = cyclic_reduce(&poly("t^4 + t"), 5).unwrap();
        // 4 ≡ -1 (mod 5)
        assert_eq!(c.representative_poly(), poly("t + t^-1"));
    }
}
