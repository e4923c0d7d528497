//! Lens spaces, two-bridge links, and homology-class congruence criteria.
//!
//! Values are stored raw (as written, e.g. `L(5,-1)`); [`LensSpace::normalize`]
//! produces the canonical form and records whether a sign flip was applied
//! on the way. See [`crate::conventions`] for the sign ledger.

use std::fmt;
use std::str::FromStr;

use crate::conventions;
use crate::error::{Error, Result};
use crate::exact::{cf_eval, quadratic_solutions};
use crate::num::{int, mod_reduce, Int};

/// A lens space `L(p, q)` with `gcd(|p|, |q|) = 1`, stored raw.
///
/// Canonical form: `p >= 0`; `0 < q < p` for `p >= 2`; `L(1, 0)` is `S^3`
/// and `L(0, 1)` is `S^1 x S^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LensSpace<T: Int> {
    p: T,
    q: T,
}

impl<T: Int> LensSpace<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !p.gcd(&q).is_one() {
            return Err(Error::NonCoprime { what: "lens space", a: p.to_string(), b: q.to_string() });
        }
        Ok(Self { p, q })
    }

    pub fn s3() -> Self {
        Self { p: T::one(), q: T::zero() }
    }

    pub fn s1_x_s2() -> Self {
        Self { p: T::zero(), q: T::one() }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// Canonical form plus a flag recording whether a sign flip
    /// (`(p, q) -> (-p, -q)`) was applied to reach it.
    ///
    /// Residue reduction `q -> q mod p` is not a mirror and never sets
    /// the flag; at `p = 0` and `p = 1` the `q` parameter is
    /// conventional and is forced to `1` resp. `0` silently.
    pub fn normalize(&self) -> (Self, bool) {
        let (p, q) = conventions::relabel_nonneg_raw(self.p.clone(), self.q.clone());
        let flipped = p != self.p;
        if p.is_zero() {
            return (Self::s1_x_s2(), flipped);
        }
        if p.is_one() {
            return (Self::s3(), flipped);
        }
        let q = mod_reduce(&q, &p);
        (Self { p, q }, flipped)
    }

    pub fn canonical(&self) -> Self {
        self.normalize().0
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    pub fn is_s3(&self) -> bool {
        self.canonical().p.is_one()
    }

    pub fn is_s1_x_s2(&self) -> bool {
        self.canonical().p.is_zero()
    }

    /// The mirror `L(p, -q)`, returned canonical.
    pub fn mirror(&self) -> Self {
        let (p, q) = conventions::mirror_raw(self.p.clone(), self.q.clone());
        Self { p, q }.canonical()
    }

    /// Oriented homeomorphism: equal `p` and `q2 ≡ q1` or
    /// `q1 q2 ≡ 1 (mod p)`.
    pub fn equivalent_oriented(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        if a.p != b.p {
            return false;
        }
        if a.q == b.q {
            return true;
        }
        if a.p < int(2) {
            return false;
        }
        mod_reduce(&(a.q * b.q), &a.p).is_one()
    }

    /// Homeomorphism ignoring orientation: equal `p` and
    /// `q2 ≡ ±q1^{±1} (mod p)`.
    pub fn equivalent_unoriented(&self, other: &Self) -> bool {
        if self.equivalent_oriented(other) {
            return true;
        }
        self.equivalent_oriented(&other.mirror())
    }

    /// `{"p": .., "q": ..}` (raw form).
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("p".into(), crate::jsonutil::int_value(&self.p));
        m.insert("q".into(), crate::jsonutil::int_value(&self.q));
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse(format!("expected object, got {v}")))?;
        let field = |k: &str| -> Result<T> {
            crate::jsonutil::int_from_value(
                obj.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")))?,
            )
        };
        Self::new(field("p")?, field("q")?)
    }
}

/// Renders a residue set as `{a,b,c}` (empty set: `{}`).
pub fn format_residue_set<T: Int>(set: &[T]) -> String {
    let mut out = String::from("{");
    for (i, k) in set.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&k.to_string());
    }
    out.push('}');
    out
}

/// Renders tagged residues as `{(k,+),(k,-)}`.
pub fn format_tagged_set<T: Int>(set: &[(T, SurgerySign)]) -> String {
    let mut out = String::from("{");
    for (i, (k, s)) in set.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("({k},{s})"));
    }
    out.push('}');
    out
}

impl<T: Int> fmt::Display for LensSpace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

impl<T: Int> fmt::Debug for LensSpace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for LensSpace<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = parse_pair(s, 'L')?;
        Self::new(p, q)
    }
}

fn parse_pair<T: Int>(s: &str, head: char) -> Result<(T, T)> {
    let t = s.trim();
    let inner = t
        .strip_prefix(head)
        .and_then(|r| r.trim_start().strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected {head}(p,q), got {s:?}")))?;
    let mut parts = inner.split(',');
    let mut next = || -> Result<T> {
        let part = parts.next().ok_or_else(|| Error::Parse(format!("missing component in {s:?}")))?;
        part.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad integer {part:?} in {s:?}")))
    };
    let p = next()?;
    let q = next()?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!("too many components in {s:?}")));
    }
    Ok((p, q))
}

/// The two-bridge link `B(p, q)`; its double branched cover is `L(p, q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoBridge<T: Int> {
    p: T,
    q: T,
}

impl<T: Int> TwoBridge<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !p.gcd(&q).is_one() {
            return Err(Error::NonCoprime { what: "two-bridge link", a: p.to_string(), b: q.to_string() });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn double_branched_cover(&self) -> LensSpace<T> {
        LensSpace { p: self.p.clone(), q: self.q.clone() }
    }

    pub fn canonical(&self) -> Self {
        let c = self.double_branched_cover().canonical();
        Self { p: c.p, q: c.q }
    }

    /// `B(0, 1)` (two-component unlink) and `B(1, 0)` (unknot) are
    /// accepted but flagged; operations requiring a genuine knot reject
    /// them.
    pub fn is_degenerate(&self) -> bool {
        self.canonical().p <= T::one()
    }

    /// Knots are the two-bridge links with odd `p`.
    pub fn is_knot(&self) -> bool {
        let p = self.canonical().p;
        p.is_odd() && !self.is_degenerate()
    }
}

impl<T: Int> fmt::Display for TwoBridge<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.p, self.q)
    }
}

impl<T: Int> fmt::Debug for TwoBridge<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for TwoBridge<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = parse_pair(s, 'B')?;
        Self::new(p, q)
    }
}

/// The two-bridge link `B(p, q)` whose plat is described by the given
/// continued fraction: `-p/q = [x_1, ..., x_n]`.
pub fn two_bridge_from_cf<T: Int>(terms: &[T]) -> Result<TwoBridge<T>> {
    let v = cf_eval(terms)?;
    // -p/q = numer/denom, with the canonical denominator >= 0.
    Ok(TwoBridge { p: v.numer().clone(), q: -v.denom().clone() })
}

/// Unordered connected sum of lens spaces. Summands are stored
/// canonical, `S^3` summands dropped, order fixed by `(p, q)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LensSum<T: Int> {
    summands: Vec<LensSpace<T>>,
}

impl<T: Int> LensSum<T> {
    pub fn new<I: IntoIterator<Item = LensSpace<T>>>(parts: I) -> Self {
        let mut summands: Vec<LensSpace<T>> =
            parts.into_iter().map(|l| l.canonical()).filter(|l| !l.is_s3()).collect();
        summands.sort_by(|a, b| (a.p.clone(), a.q.clone()).cmp(&(b.p.clone(), b.q.clone())));
        Self { summands }
    }

    pub fn summands(&self) -> &[LensSpace<T>] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiset equality under oriented or unoriented equivalence of
    /// the summands.
    pub fn sum_equivalent(&self, other: &Self, oriented: bool) -> bool {
        if self.summands.len() != other.summands.len() {
            return false;
        }
        let mut unused: Vec<&LensSpace<T>> = other.summands.iter().collect();
        'outer: for l in &self.summands {
            for i in 0..unused.len() {
                let matched = if oriented {
                    l.equivalent_oriented(unused[i])
                } else {
                    l.equivalent_unoriented(unused[i])
                };
                if matched {
                    unused.swap_remove(i);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

impl<T: Int> fmt::Display for LensSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "S^3");
        }
        for (i, l) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " # ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<T: Int> fmt::Debug for LensSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Int> FromStr for LensSum<T> {
    type Err = Error;

    /// Parses `L(a,b) # L(c,d) # ...` or the empty sum `S^3`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "S^3" {
            return Ok(Self::new(Vec::new()));
        }
        let parts: Result<Vec<LensSpace<T>>> = s.split('#').map(|part| part.parse()).collect();
        Ok(Self::new(parts?))
    }
}

/// Homology class `k` in `H_1(L(p, q)) = Z/p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass<T: Int> {
    p: T,
    k: T,
}

impl<T: Int> HomologyClass<T> {
    pub fn new(p: T, k: T) -> Result<Self> {
        if !p.is_positive() {
            return Err(Error::OutOfRange { what: "homology class", expected: "p >= 1", got: p.to_string() });
        }
        let k = mod_reduce(&k, &p);
        Ok(Self { p, k })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn k(&self) -> &T {
        &self.k
    }

    /// The same unoriented knot class: `p - k`.
    pub fn negated(&self) -> Self {
        Self { p: self.p.clone(), k: mod_reduce(&-self.k.clone(), &self.p) }
    }
}

impl<T: Int> fmt::Display for HomologyClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in Z/{}", self.k, self.p)
    }
}

impl<T: Int> fmt::Debug for HomologyClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sign tag for a homology-sphere surgery class: `+` means
/// `k^2 ≡ q (mod p)`, `-` means `k^2 ≡ -q (mod p)`. The tag agrees with
/// whether the corresponding integral surgery is a `±1`-surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurgerySign {
    Plus,
    Minus,
}

impl fmt::Display for SurgerySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plus => write!(f, "+"),
            Self::Minus => write!(f, "-"),
        }
    }
}

/// All residues `k` whose class in `L(p, q)` supports an integral
/// surgery to a homology sphere: `k^2 ≡ ±q (mod p)`, tagged by the sign.
///
/// The result is closed under `k -> p - k` within each tag.
pub fn hsphere_surgery_classes<T: Int>(p: &T, q: &T) -> Result<Vec<(T, SurgerySign)>> {
    if !p.is_positive() {
        return Err(Error::OutOfRange {
            what: "hsphere_surgery_classes",
            expected: "p >= 1",
            got: p.to_string(),
        });
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NonCoprime { what: "hsphere_surgery_classes", a: p.to_string(), b: q.to_string() });
    }
    let plus = mod_reduce(q, p);
    let minus = mod_reduce(&-q.clone(), p);
    let mut out = Vec::new();
    let mut k = T::zero();
    while k < *p {
        let sq = mod_reduce(&(k.clone() * k.clone()), p);
        if sq == plus {
            out.push((k.clone(), SurgerySign::Plus));
        }
        if sq == minus {
            out.push((k.clone(), SurgerySign::Minus));
        }
        k = k + T::one();
    }
    Ok(out)
}

/// Residues `k` with `k^2 + k + 1 ≡ 0 (mod p)` — the homology classes
/// of duals to knots in the trefoil fiber (type VII).
pub fn berge_vii_classes<T: Int>(p: &T) -> Result<Vec<T>> {
    quadratic_solutions(&T::one(), &T::one(), &T::one(), p)
}

/// Residues `k` with `k^2 - k - 1 ≡ 0 (mod p)` — the homology classes
/// of duals to knots in the figure-eight fiber (type VIII).
pub fn berge_viii_classes<T: Int>(p: &T) -> Result<Vec<T>> {
    quadratic_solutions(&T::one(), &-T::one(), &-T::one(), p)
}

/// Homology classes of the two almost-simple knots in `L(p, q)`:
/// `T_L` is homologous to the simple knot of class `q + 1` and `T_R`
/// to the one of class `q - 1`.
pub fn hedden_classes<T: Int>(p: &T, q: &T) -> Result<(HomologyClass<T>, HomologyClass<T>)> {
    if !p.gcd(q).is_one() {
        return Err(Error::NonCoprime { what: "hedden_classes", a: p.to_string(), b: q.to_string() });
    }
    Ok((
        HomologyClass::new(p.clone(), q.clone() + T::one())?,
        HomologyClass::new(p.clone(), q.clone() - T::one())?,
    ))
}

/// Whether `T_L` resp. `T_R` in `L(p, q)` admits an integral surgery to
/// a homology sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeddenConditions {
    /// `(q+1)^2 ≡ -q (mod p)`
    pub t_l_admits: bool,
    /// `(q-1)^2 ≡ -q (mod p)`
    pub t_r_admits: bool,
}

/// Evaluates the two congruences `(q±1)^2 ≡ -q (mod p)`.
///
/// Substituting `k = -(q+1)` turns the `T_L` congruence into
/// `k^2 - k - 1 ≡ 0`, and substituting `k = q - 1` turns the `T_R`
/// congruence into `k^2 + k + 1 ≡ 0`; so `T_L` admits iff `-(q+1)` is a
/// root of the figure-eight congruence ([`berge_viii_classes`]) and
/// `T_R` admits iff `q - 1` is a root of the trefoil congruence
/// ([`berge_vii_classes`]).
pub fn hedden_hs_conditions<T: Int>(p: &T, q: &T) -> Result<HeddenConditions> {
    if !p.is_positive() {
        return Err(Error::OutOfRange {
            what: "hedden_hs_conditions",
            expected: "p >= 1",
            got: p.to_string(),
        });
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NonCoprime { what: "hedden_hs_conditions", a: p.to_string(), b: q.to_string() });
    }
    let target = mod_reduce(&-q.clone(), p);
    let admits = |k: T| mod_reduce(&(k.clone() * k), p) == target;
    Ok(HeddenConditions {
        t_l_admits: admits(q.clone() + T::one()),
        t_r_admits: admits(q.clone() - T::one()),
    })
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;

    type L = LensSpace<i64>;

    fn lens(p: i64, q: i64) -> L {
        L::new(p, q).unwrap()
    }

    #[test]
    fn normalize_examples() {
        // Residue reduction is not a mirror.
        assert_eq!(lens(5, -1).normalize(), (lens(5, 4), false));
        // S^3 in disguise.
        assert_eq!(lens(1, 7).normalize(), (lens(1, 0), false));
        // Negative p is a recorded sign flip: L(-n, 3n+1) at n = 5.
        assert_eq!(lens(-5, 16).normalize(), (lens(5, 4), true));
        assert_eq!(lens(5, -1).canonical(), lens(-5, 1).canonical());
        // S^1 x S^2.
        assert_eq!(lens(0, -1).canonical(), lens(0, 1));
        assert!(L::new(4, 6).is_err());
        assert!(L::new(0, 0).is_err());
    }

    #[test]
    fn normalize_idempotent() {
        for p in -20i64..=20 {
            for q in -20i64..=20 {
                let Ok(l) = L::new(p, q) else { continue };
                let (c, _) = l.normalize();
                assert_eq!(c.normalize(), (c.clone(), false), "{l}");
                assert!(c.is_canonical());
            }
        }
    }

    #[test]
    fn oriented_equivalence_examples() {
        assert!(lens(15, 4).equivalent_oriented(&lens(15, 4)));
        // 2 * 3 = 6 ≡ 1 (mod 5)
        assert!(lens(5, 2).equivalent_oriented(&lens(5, 3)));
        // 3 ≢ 2 and 6 ≢ 1 (mod 7)
        assert!(!lens(7, 2).equivalent_oriented(&lens(7, 3)));
        // relabeling (-p, -q) is orientation preserving
        assert!(lens(-7, -2).equivalent_oriented(&lens(7, 2)));
    }

    #[test]
    fn unoriented_equivalence_examples() {
        // 4 ≡ -1 (mod 5)
        assert!(lens(5, 1).equivalent_unoriented(&lens(5, 4)));
        // 2 * 3 ≡ -1 (mod 7)
        assert!(lens(7, 2).equivalent_unoriented(&lens(7, 3)));
        assert!(!lens(7, 2).equivalent_unoriented(&lens(5, 2)));
        assert!(!lens(7, 2).equivalent_oriented(&lens(5, 1)));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(lens(5, 1).mirror(), lens(5, 4));
        assert_eq!(lens(7, 2).mirror(), lens(7, 5));
        let l = lens(15, 4);
        assert!(l.mirror().mirror().equivalent_oriented(&l));
    }

    #[test]
    fn mirror_fixed_points_are_q_squared_minus_one() {
        // L(p, q) is orientation-preservingly its own mirror iff
        // q^2 ≡ -1 (mod p) (or p <= 2).
        for p in 3i64..=200 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let l = lens(p, q);
                let self_mirror = l.equivalent_oriented(&l.mirror());
                assert_eq!(self_mirror, (q * q + 1) % p == 0, "L({p},{q})");
            }
        }
        assert!(lens(2, 1).equivalent_oriented(&lens(2, 1).mirror()));
    }

    #[test]
    fn equivalence_relation_sanity() {
        let reps: Vec<L> = (2i64..40)
            .flat_map(|p| (1..p).filter(move |q| p.gcd(q) == 1).map(move |q| lens(p, q)))
            .collect();
        for a in &reps {
            assert!(a.equivalent_oriented(a));
            for b in &reps {
                assert_eq!(a.equivalent_oriented(b), b.equivalent_oriented(a));
                assert_eq!(a.equivalent_unoriented(b), b.equivalent_unoriented(a));
                if a.equivalent_oriented(b) {
                    assert!(a.equivalent_unoriented(b));
                    for c in &reps {
                        if b.equivalent_oriented(c) {
                            assert!(a.equivalent_oriented(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sum_examples() {
        let s1 = LensSum::new([lens(2, 1), lens(7, 3)]);
        let s2 = LensSum::new([lens(7, 3), lens(2, 1)]);
        assert!(s1.sum_equivalent(&s2, true));
        assert_eq!(s1.to_string(), "L(2,1) # L(7,3)");

        // L(2,-1) # L(7,3) vs L(-2,7) # L(7,-2), unoriented.
        let a = LensSum::new([lens(2, -1), lens(7, 3)]);
        let b = LensSum::new([lens(-2, 7), lens(7, -2)]);
        assert!(a.sum_equivalent(&b, false));

        let c = LensSum::new([lens(2, 1)]);
        let d = LensSum::new([lens(2, 1), lens(3, 1)]);
        assert!(!c.sum_equivalent(&d, false));

        // S^3 summands vanish.
        assert_eq!(LensSum::new([lens(1, 5), lens(2, 1)]).len(), 1);
        assert_eq!(LensSum::new([lens(1, 0)]).to_string(), "S^3");
    }

    #[test]
    fn sum_parse_roundtrip() {
        for s in ["S^3", "L(2,1) # L(7,3)", "L(0,1)"] {
            let sum: LensSum<i64> = s.parse().unwrap();
            assert_eq!(sum.to_string(), s);
        }
    }

    #[test]
    fn hsphere_examples() {
        use SurgerySign::*;
        // q = -1: + asks k^2 ≡ -1 ≡ 4, - asks k^2 ≡ 1 (mod 5).
        assert_eq!(
            hsphere_surgery_classes(&5i64, &-1).unwrap(),
            vec![(1, Minus), (2, Plus), (3, Plus), (4, Minus)]
        );
        assert_eq!(hsphere_surgery_classes(&3i64, &1).unwrap(), vec![(1, Plus), (2, Plus)]);
        assert!(hsphere_surgery_classes(&6i64, &3).is_err());
    }

    #[test]
    fn hsphere_closed_under_negation() {
        for p in 1i64..=60 {
            for q in 1..=p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let set = hsphere_surgery_classes(&p, &q).unwrap();
                for (k, s) in &set {
                    let neg = (p - k) % p;
                    assert!(set.contains(&(neg, *s)), "p={p} q={q} k={k}");
                }
            }
        }
    }

    #[test]
    fn berge_class_examples() {
        assert!(berge_vii_classes(&5i64).unwrap().is_empty());
        assert_eq!(berge_vii_classes(&7i64).unwrap(), vec![2, 4]);
        assert_eq!(berge_vii_classes(&1i64).unwrap(), vec![0]);
        assert_eq!(berge_viii_classes(&5i64).unwrap(), vec![3]);
        assert_eq!(berge_viii_classes(&11i64).unwrap(), vec![4, 8]);
        assert_eq!(berge_viii_classes(&1i64).unwrap(), vec![0]);
    }

    #[test]
    fn hedden_class_examples() {
        let (l, r) = hedden_classes(&5i64, &1).unwrap();
        assert_eq!((l.k(), r.k()), (&2, &0));
        let (l, r) = hedden_classes(&7i64, &3).unwrap();
        assert_eq!((l.k(), r.k()), (&4, &2));
    }

    #[test]
    fn hedden_mirror_swaps_roles() {
        // The classes of L(p, -q) are the negated classes of L(p, q)
        // with T_L and T_R exchanged.
        for p in 2i64..=80 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let (l, r) = hedden_classes(&p, &q).unwrap();
                let (lm, rm) = hedden_classes(&p, &-q).unwrap();
                assert_eq!(lm, r.negated(), "p={p} q={q}");
                assert_eq!(rm, l.negated(), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn hedden_condition_examples() {
        // (5,1): (q+1)^2 = 4 ≡ -1 (mod 5) so T_L admits; (q-1)^2 = 0 does not.
        let c = hedden_hs_conditions(&5i64, &1).unwrap();
        assert!(c.t_l_admits);
        assert!(!c.t_r_admits);
        // (7,3): (q-1)^2 = 4 ≡ -3 (mod 7) so T_R admits.
        let c = hedden_hs_conditions(&7i64, &3).unwrap();
        assert!(c.t_r_admits);
    }

    #[test]
    fn hedden_berge_substitution_identities() {
        // k = -(q+1) turns (q+1)^2 ≡ -q into k^2 - k - 1 ≡ 0, and
        // k = q-1 turns (q-1)^2 ≡ -q into k^2 + k + 1 ≡ 0.
        for p in 1i64..=120 {
            let vii = berge_vii_classes(&p).unwrap();
            let viii = berge_viii_classes(&p).unwrap();
            for q in 1..=p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let c = hedden_hs_conditions(&p, &q).unwrap();
                assert_eq!(c.t_l_admits, viii.contains(&(-(q + 1)).rem_euclid(p)), "p={p} q={q}");
                assert_eq!(c.t_r_admits, vii.contains(&(q - 1).rem_euclid(p)), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn hedden_substitution_counterexample_for_swapped_pairing() {
        // Regression guard: at (p, q) = (5, 1) the T_L congruence holds
        // while k^2 + k + 1 has no root at -(q+1); the two congruence
        // families must not be interchanged.
        let c = hedden_hs_conditions(&5i64, &1).unwrap();
        assert!(c.t_l_admits);
        let vii = berge_vii_classes(&5i64).unwrap();
        assert!(!vii.contains(&(-2i64).rem_euclid(5)));
    }

    #[test]
    fn two_bridge_from_cf_examples() {
        let b = two_bridge_from_cf(&[1i64, -1, -1, 3]).unwrap();
        assert_eq!((b.p(), b.q()), (&5, &-1));
        assert!(b.is_knot());

        let b = two_bridge_from_cf(&[2i64, -1, -2, 3]).unwrap();
        assert_eq!((b.p(), b.q()), (&15, &-4));
        assert!(b.is_knot());

        // [0] is the two-component unlink B(0,1); degenerate, not a knot.
        let b = two_bridge_from_cf(&[0i64]).unwrap();
        assert_eq!(b.canonical(), TwoBridge::new(0, 1).unwrap());
        assert!(b.is_degenerate());
        assert!(!b.is_knot());

        // The empty plat is the unknot B(1,0); degenerate by convention.
        let b = two_bridge_from_cf(&[] as &[i64]).unwrap();
        assert_eq!(b.canonical(), TwoBridge::new(1, 0).unwrap());
        assert!(b.is_degenerate());
    }

    #[test]
    fn lens_parse_roundtrip() {
        for s in ["L(5,-1)", "L(15,4)", "L(0,1)"] {
            let l: L = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("L(4,2)".parse::<L>().is_err());
        assert!("L(1)".parse::<L>().is_err());
        assert!("M(1,2)".parse::<L>().is_err());
    }
}
