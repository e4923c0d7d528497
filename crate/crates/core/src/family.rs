//! Synthesizes and cross-verifies every desk-checkable fact about the
//! knot family: parameters `(p, q) = (3n^2+n+1, -3n+2)`, the companion
//! `(3n+1, n)`-torus knot, the continued-fraction identity, Alexander
//! polynomials and genus, the tunnel-number verdict, and the two
//! surgery identifications. Reports never abort: each check records its
//! own outcome.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{cf_eval, Rational};
use crate::jsonutil::int_value;
use crate::laurent::{
    correction_lift, cyclic_reduce, genus_from_alexander, lspace_form_check,
    tilde_constraints_check, torus_alexander, LSpaceForm, LaurentPoly,
};
use crate::lens::{
    berge_vii_classes, format_residue_set, format_tagged_set, hsphere_surgery_classes, LensSpace,
    LensSum, SurgerySign,
};
use crate::num::{int, mod_reduce, Int};
use crate::seifert::{tunnel_verdict, TunnelAnalysis};
use crate::surgery::{torus_knot_integral_surgery, unknot_surgery, SurgeryResult};

/// External-table claims are reported, never computed.
pub const TANGE_NOTE: &str = "not evaluated (external table)";

/// `(p, q) = (3n^2 + n + 1, -3n + 2)`.
pub fn family_params<T: Int>(n: &T) -> (T, T) {
    let three = int::<T>(3);
    let p = three.clone() * n.clone() * n.clone() + n.clone() + T::one();
    let q = int::<T>(2) - three * n.clone();
    (p, q)
}

/// The companion `(3n+1, n)`-torus knot, raw (negative for `n <= 0`;
/// negative parameters stand for the mirror).
pub fn family_torus_knot<T: Int>(n: &T) -> (T, T) {
    (int::<T>(3) * n.clone() + T::one(), n.clone())
}

/// Checks `cf_eval([n, -1, -n, 3]) = -(3n^2+n+1)/(-3n+2)` exactly.
pub fn verify_cf_identity<T: Int>(n: &T) -> Result<bool> {
    let (p, q) = family_params(n);
    let value = cf_eval(&[n.clone(), -T::one(), -n.clone(), int(3)])?;
    Ok(value == Rational::new(-p, q)?)
}

/// `(Δ_T, Δ_K)` for `n >= 1`: the companion's torus-knot polynomial and
/// its correction lift to max exponent `(p+1)/2`.
pub fn family_alexander<T: Int>(n: &T) -> Result<(LaurentPoly<T>, LaurentPoly<T>)> {
    if !n.is_positive() {
        return Err(Error::OutOfRange {
            what: "family_alexander",
            expected: "n >= 1",
            got: n.to_string(),
        });
    }
    let (a, b) = family_torus_knot(n);
    let (p, _) = family_params(n);
    alexander_pair(&a, &b, &p)
}

fn alexander_pair<T: Int>(a: &T, b: &T, p: &T) -> Result<(LaurentPoly<T>, LaurentPoly<T>)> {
    let delta_t = if a.abs().is_one() || b.abs().is_one() || a.is_zero() || b.is_zero() {
        LaurentPoly::one()
    } else {
        torus_alexander(&a.abs(), &b.abs())?
    };
    let p_small = p
        .to_i64()
        .ok_or_else(|| Error::TooLarge { what: "surgery coefficient p", got: p.to_string() })?;
    let delta_k = correction_lift(&delta_t, p_small)?;
    Ok((delta_t, delta_k))
}

/// Outcome of one recorded cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail { detail: String },
    NotEvaluated { reason: String },
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass)
    }

    fn from_bool(ok: bool, detail: &str) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail { detail: detail.to_string() }
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Self::Pass => json!({ "status": "pass" }),
            Self::Fail { detail } => json!({ "status": "fail", "detail": detail }),
            Self::NotEvaluated { reason } => json!({ "status": "not-evaluated", "reason": reason }),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pass => write!(f, "pass"),
            Self::Fail { detail } => write!(f, "fail ({detail})"),
            Self::NotEvaluated { reason } => write!(f, "not evaluated ({reason})"),
        }
    }
}

/// Alexander-polynomial block of a report.
#[derive(Clone, Debug)]
pub struct AlexanderData<T: Int> {
    pub delta_t: LaurentPoly<T>,
    pub delta_k: LaurentPoly<T>,
    pub genus_k: i64,
    /// `genus = (p+1)/2`
    pub genus_formula: Check,
    /// `Δ_K(1) = 1`
    pub value_at_one: Check,
    pub lspace_form: LSpaceForm,
    /// `Δ_K ≡ Δ_T (mod t^p - 1)`
    pub cyclic_match: Check,
    /// reduced coefficients in `{0, ±1}` (no 2 since p is odd)
    pub tilde_constraints: Check,
}

/// The lens-space surgery identification `p`-surgery on `T(3n+1, n)`.
#[derive(Clone, Debug)]
pub struct LensSurgeryCheck<T: Int> {
    pub coefficient: T,
    pub result: Option<SurgeryResult<T>>,
    /// `n^2 q ≡ -1 (mod p)` — exact modular identity.
    pub modular_identity: Check,
    /// result is unoriented-homeomorphic to `L(p, q)` — asserted.
    pub unoriented_match: Check,
    /// oriented comparison — recorded, not asserted.
    pub oriented_match: Check,
}

/// The reducible surgery `ab`-surgery on `T(3n+1, n)` against
/// `L(n, -1) # L(3n+1, 3)`.
#[derive(Clone, Debug)]
pub struct ReducibleCheck<T: Int> {
    pub coefficient: T,
    pub expected: LensSum<T>,
    pub result: Option<SurgeryResult<T>>,
    pub unoriented_match: Check,
    pub oriented_match: Check,
}

/// Everything verified about one family member.
#[derive(Clone, Debug)]
pub struct FamilyReport<T: Int> {
    pub n: T,
    pub p: T,
    pub q: T,
    /// Raw companion parameters `(3n+1, n)`.
    pub torus_knot: (T, T),
    /// `n <= 0`: polynomial/surgery data computed from `|3n+1|, |n|`.
    pub companion_mirrored: bool,
    pub cf_identity: Check,
    pub alexander: Option<AlexanderData<T>>,
    pub alexander_note: Option<String>,
    /// `p + 2`, reported metadata — not a computed homology rank.
    pub hfk_rank_reported: T,
    pub tunnel: TunnelAnalysis<T>,
    pub lens_surgery: LensSurgeryCheck<T>,
    pub reducible: ReducibleCheck<T>,
    pub hsphere_classes: Vec<(T, SurgerySign)>,
    pub berge_vii_at_p: Vec<T>,
    pub caveats: Vec<String>,
}

/// Builds the full report for one `n`. Individual check failures are
/// recorded per field and never abort the report.
pub fn family_report<T: Int>(n: &T) -> FamilyReport<T> {
    let (p, q) = family_params(n);
    let (a, b) = family_torus_knot(n);
    let companion_mirrored = !n.is_positive();
    let mut caveats = Vec::new();
    if companion_mirrored {
        caveats.push(
            "companion parameters (3n+1, n) are not both positive; data computed from absolute values (mirror convention)"
                .to_string(),
        );
    }
    debug_assert!(p.is_odd(), "3n^2 + n + 1 is odd for every integer n");

    let cf_identity = match verify_cf_identity(n) {
        Ok(true) => Check::Pass,
        Ok(false) => Check::Fail { detail: "cf value differs from -p/q".into() },
        Err(e) => Check::NotEvaluated { reason: e.to_string() },
    };

    let (alexander, alexander_note) = match alexander_pair(&a, &b, &p) {
        Ok((delta_t, delta_k)) => (alexander_checks(&p, delta_t, delta_k), None),
        Err(e) => (None, Some(e.to_string())),
    };

    let tunnel = tunnel_verdict(n);
    let lens_surgery = lens_surgery_check(n, &p, &q, &a, &b);
    let reducible = reducible_check(n, &a, &b);

    let hsphere_classes = hsphere_surgery_classes(&p, &q).unwrap_or_default();
    let berge_vii_at_p = berge_vii_classes(&p).unwrap_or_default();

    FamilyReport {
        n: n.clone(),
        hfk_rank_reported: p.clone() + int(2),
        p,
        q,
        torus_knot: (a, b),
        companion_mirrored,
        cf_identity,
        alexander,
        alexander_note,
        tunnel,
        lens_surgery,
        reducible,
        hsphere_classes,
        berge_vii_at_p,
        caveats,
    }
}

fn alexander_checks<T: Int>(
    p: &T,
    delta_t: LaurentPoly<T>,
    delta_k: LaurentPoly<T>,
) -> Option<AlexanderData<T>> {
    let genus_k = genus_from_alexander(&delta_k).ok()?;
    let expected_genus = (p.clone() + T::one()) / int(2);
    let genus_formula = Check::from_bool(
        T::from(genus_k) == expected_genus,
        &format!("genus {genus_k} != (p+1)/2 = {expected_genus}"),
    );
    let value_at_one =
        Check::from_bool(delta_k.eval_at_one().is_one(), "delta_K(1) != 1");
    let lspace_form = lspace_form_check(&delta_k);
    let p_small = p.to_i64()?;
    let rk = cyclic_reduce(&delta_k, p_small).ok()?;
    let rt = cyclic_reduce(&delta_t, p_small).ok()?;
    let cyclic_match = Check::from_bool(rk == rt, "delta_K and delta_T differ mod t^p - 1");
    let no_two = rk.coeffs().iter().all(|c| c.is_zero() || c.abs().is_one());
    let tilde_constraints = Check::from_bool(
        tilde_constraints_check(&rk) && no_two,
        "reduced coefficients leave {0, ±1}",
    );
    Some(AlexanderData {
        delta_t,
        delta_k,
        genus_k,
        genus_formula,
        value_at_one,
        lspace_form,
        cyclic_match,
        tilde_constraints,
    })
}

fn lens_surgery_check<T: Int>(n: &T, p: &T, q: &T, a: &T, b: &T) -> LensSurgeryCheck<T> {
    let modular = mod_reduce(&(n.clone() * n.clone() * q.clone() + T::one()), p).is_zero();
    let modular_identity = Check::from_bool(modular, "n^2 q is not -1 mod p");

    let (aa, ab) = (a.abs(), b.abs());
    let result = if aa.is_zero() || ab.is_zero() {
        // n = 0: the companion chart degenerates to the unknot.
        Ok(SurgeryResult::Lens(unknot_surgery(p.clone())))
    } else {
        torus_knot_integral_surgery(&aa, &ab, p)
    };

    match result {
        Err(e) => LensSurgeryCheck {
            coefficient: p.clone(),
            result: None,
            modular_identity,
            unoriented_match: Check::NotEvaluated { reason: e.to_string() },
            oriented_match: Check::NotEvaluated { reason: "surgery not computed".into() },
        },
        Ok(res) => {
            let (unoriented, oriented) = match (&res, LensSpace::new(p.clone(), q.clone())) {
                (SurgeryResult::Lens(l), Ok(target)) => (
                    Check::from_bool(
                        l.equivalent_unoriented(&target),
                        &format!("{l} is not unoriented-equivalent to {target}"),
                    ),
                    Check::from_bool(
                        l.equivalent_oriented(&target),
                        &format!("{l} is not oriented-equivalent to {target}"),
                    ),
                ),
                (other, Ok(target)) => {
                    let detail = format!("expected a lens space equivalent to {target}, got {other}");
                    (Check::Fail { detail: detail.clone() }, Check::Fail { detail })
                }
                (_, Err(e)) => {
                    let reason = e.to_string();
                    (
                        Check::NotEvaluated { reason: reason.clone() },
                        Check::NotEvaluated { reason },
                    )
                }
            };
            LensSurgeryCheck {
                coefficient: p.clone(),
                result: Some(res),
                modular_identity,
                unoriented_match: unoriented,
                oriented_match: oriented,
            }
        }
    }
}

fn reducible_check<T: Int>(n: &T, a: &T, b: &T) -> ReducibleCheck<T> {
    let (aa, ab) = (a.abs(), b.abs());
    let m = aa.clone() * ab.clone();
    let expected_parts: Result<Vec<LensSpace<T>>> = vec![
        LensSpace::new(n.clone(), -T::one()),
        LensSpace::new(int::<T>(3) * n.clone() + T::one(), int(3)),
    ]
    .into_iter()
    .collect();
    let expected = match expected_parts {
        Ok(parts) => LensSum::new(parts),
        Err(_) => LensSum::new(Vec::new()),
    };

    let result = if aa.is_zero() || ab.is_zero() {
        Ok(SurgeryResult::Lens(unknot_surgery(m.clone())))
    } else {
        torus_knot_integral_surgery(&aa, &ab, &m)
    };

    match result {
        Err(e) => ReducibleCheck {
            coefficient: m,
            expected,
            result: None,
            unoriented_match: Check::NotEvaluated { reason: e.to_string() },
            oriented_match: Check::NotEvaluated { reason: "surgery not computed".into() },
        },
        Ok(res) => {
            let (unoriented, oriented) = match res.as_sum() {
                Some(sum) => (
                    Check::from_bool(
                        sum.sum_equivalent(&expected, false),
                        &format!("{sum} does not match {expected} (unoriented)"),
                    ),
                    Check::from_bool(
                        sum.sum_equivalent(&expected, true),
                        &format!("{sum} does not match {expected} (oriented)"),
                    ),
                ),
                None => {
                    let detail = format!("expected a connected sum, got {res}");
                    (Check::Fail { detail: detail.clone() }, Check::Fail { detail })
                }
            };
            ReducibleCheck {
                coefficient: m,
                expected,
                result: Some(res),
                unoriented_match: unoriented,
                oriented_match: oriented,
            }
        }
    }
}

impl<T: Int> FamilyReport<T> {
    /// Every recorded cross-check that did not pass, as
    /// `"field: detail"` lines. Empty means the report is fully
    /// verified. Oriented comparisons are recorded but not required.
    pub fn verification_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut require = |name: &str, check: &Check| {
            if !check.passed() {
                out.push(format!("{name}: {check}"));
            }
        };
        require("cf_identity", &self.cf_identity);
        require("lens_surgery.modular_identity", &self.lens_surgery.modular_identity);
        require("lens_surgery.unoriented_match", &self.lens_surgery.unoriented_match);
        require("reducible.unoriented_match", &self.reducible.unoriented_match);
        match &self.alexander {
            Some(d) => {
                require("alexander.genus_formula", &d.genus_formula);
                require("alexander.value_at_one", &d.value_at_one);
                require("alexander.cyclic_match", &d.cyclic_match);
                require("alexander.tilde_constraints", &d.tilde_constraints);
                if !d.lspace_form.ok {
                    out.push(format!(
                        "alexander.lspace_form: {}",
                        d.lspace_form
                            .violation
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "violated".into())
                    ));
                }
            }
            None if self.n.is_positive() => {
                out.push(format!(
                    "alexander: missing for n >= 1 ({})",
                    self.alexander_note.clone().unwrap_or_default()
                ));
            }
            None => {}
        }
        if !self.p.is_odd() {
            out.push(format!("p: {} is not odd", self.p));
        }
        if !self.hsphere_classes.iter().any(|(_, s)| *s == SurgerySign::Minus) {
            out.push("hsphere_classes: no class with the - tag".into());
        }
        let tunnel_two = self.tunnel.verdict.is_tunnel_two();
        if tunnel_two != (self.n.abs() >= int(4)) {
            out.push(format!("tunnel: verdict {} at n = {}", self.tunnel.verdict, self.n));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let check_or = |c: &Check| c.to_json();
        let alexander = match &self.alexander {
            Some(d) => json!({
                "delta_t": { "text": d.delta_t.to_string(), "pairs": d.delta_t.to_json() },
                "delta_k": { "text": d.delta_k.to_string(), "pairs": d.delta_k.to_json() },
                "genus": d.genus_k,
                "genus_formula": check_or(&d.genus_formula),
                "value_at_one": check_or(&d.value_at_one),
                "lspace_form": match &d.lspace_form.violation {
                    None => json!({ "ok": true, "exponents": d.lspace_form.exponents }),
                    Some(v) => json!({ "ok": false, "violation": v.to_string() }),
                },
                "cyclic_match": check_or(&d.cyclic_match),
                "tilde_constraints": check_or(&d.tilde_constraints),
            }),
            None => Value::Null,
        };
        json!({
            "n": int_value(&self.n),
            "p": int_value(&self.p),
            "q": int_value(&self.q),
            "torus_knot": {
                "a": int_value(&self.torus_knot.0),
                "b": int_value(&self.torus_knot.1),
                "mirrored": self.companion_mirrored,
            },
            "cf_identity": check_or(&self.cf_identity),
            "alexander": alexander,
            "alexander_note": self.alexander_note,
            "hfk_rank_reported": int_value(&self.hfk_rank_reported),
            "tunnel": {
                "verdict": self.tunnel.verdict.to_string(),
                "alpha_cover": self.tunnel.alpha_cover.to_string(),
                "beta_cover": self.tunnel.beta_cover.to_string(),
                "beta_filling": {
                    "pretzel": self.tunnel.beta_filling.0.to_string(),
                    "two_bridge": self.tunnel.beta_filling.1,
                },
                "alpha_filling": {
                    "pretzel": self.tunnel.alpha_filling.0.to_string(),
                    "two_bridge": self.tunnel.alpha_filling.1,
                },
            },
            "lens_surgery": {
                "coefficient": int_value(&self.lens_surgery.coefficient),
                "result": self.lens_surgery.result.as_ref().map(|r| r.to_string()),
                "modular_identity": check_or(&self.lens_surgery.modular_identity),
                "unoriented_match": check_or(&self.lens_surgery.unoriented_match),
                "oriented_match": check_or(&self.lens_surgery.oriented_match),
            },
            "reducible": {
                "coefficient": int_value(&self.reducible.coefficient),
                "expected": self.reducible.expected.to_string(),
                "result": self.reducible.result.as_ref().map(|r| r.to_string()),
                "unoriented_match": check_or(&self.reducible.unoriented_match),
                "oriented_match": check_or(&self.reducible.oriented_match),
            },
            "hsphere_classes": self.hsphere_classes.iter()
                .map(|(k, s)| json!([int_value(k), s.to_string()]))
                .collect::<Vec<_>>(),
            "berge_vii_at_p": self.berge_vii_at_p.iter().map(int_value).collect::<Vec<_>>(),
            "tange_knots": TANGE_NOTE,
            "caveats": self.caveats,
        })
    }

    pub fn csv_header() -> &'static [&'static str] {
        &[
            "n",
            "p",
            "q",
            "torus_a",
            "torus_b",
            "companion_mirrored",
            "cf_identity",
            "delta_t",
            "delta_k",
            "genus",
            "genus_formula",
            "value_at_one",
            "lspace_form",
            "cyclic_match",
            "tilde_constraints",
            "hfk_rank_reported",
            "tunnel_verdict",
            "alpha_cover",
            "beta_cover",
            "lens_surgery_result",
            "lens_modular_identity",
            "lens_unoriented_match",
            "lens_oriented_match",
            "reducible_expected",
            "reducible_result",
            "reducible_unoriented_match",
            "reducible_oriented_match",
            "hsphere_classes",
            "berge_vii_at_p",
            "tange_knots",
            "caveats",
        ]
    }

    pub fn to_csv_record(&self) -> Vec<String> {
        let check = |c: &Check| match c {
            Check::Pass => "pass".to_string(),
            Check::Fail { .. } => "fail".to_string(),
            Check::NotEvaluated { .. } => "not-evaluated".to_string(),
        };
        let (delta_t, delta_k, genus, gf, v1, lf, cm, tc) = match &self.alexander {
            Some(d) => (
                d.delta_t.to_string(),
                d.delta_k.to_string(),
                d.genus_k.to_string(),
                check(&d.genus_formula),
                check(&d.value_at_one),
                if d.lspace_form.ok { "pass".into() } else { "fail".to_string() },
                check(&d.cyclic_match),
                check(&d.tilde_constraints),
            ),
            None => {
                let na = || "n/a".to_string();
                (na(), na(), na(), na(), na(), na(), na(), na())
            }
        };
        vec![
            self.n.to_string(),
            self.p.to_string(),
            self.q.to_string(),
            self.torus_knot.0.to_string(),
            self.torus_knot.1.to_string(),
            self.companion_mirrored.to_string(),
            check(&self.cf_identity),
            delta_t,
            delta_k,
            genus,
            gf,
            v1,
            lf,
            cm,
            tc,
            self.hfk_rank_reported.to_string(),
            self.tunnel.verdict.to_string(),
            self.tunnel.alpha_cover.to_string(),
            self.tunnel.beta_cover.to_string(),
            self.lens_surgery.result.as_ref().map(|r| r.to_string()).unwrap_or_default(),
            check(&self.lens_surgery.modular_identity),
            check(&self.lens_surgery.unoriented_match),
            check(&self.lens_surgery.oriented_match),
            self.reducible.expected.to_string(),
            self.reducible.result.as_ref().map(|r| r.to_string()).unwrap_or_default(),
            check(&self.reducible.unoriented_match),
            check(&self.reducible.oriented_match),
            format_tagged_set(&self.hsphere_classes),
            format_residue_set(&self.berge_vii_at_p),
            TANGE_NOTE.to_string(),
            self.caveats.join("; "),
        ]
    }
}

impl<T: Int> fmt::Display for FamilyReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "K_{}: p = {}, q = {}", self.n, self.p, self.q)?;
        let raw = LensSpace::new(self.p.clone(), self.q.clone())
            .map(|l| {
                let c = l.canonical();
                format!("{l} (canonical {c})")
            })
            .unwrap_or_else(|e| format!("invalid: {e}"));
        writeln!(f, "  surgery lens space: {raw}")?;
        writeln!(
            f,
            "  companion torus knot: T({},{}){}",
            self.torus_knot.0,
            self.torus_knot.1,
            if self.companion_mirrored { " [absolute values used]" } else { "" }
        )?;
        writeln!(f, "  cf identity [n,-1,-n,3] = -p/q: {}", self.cf_identity)?;
        match &self.alexander {
            Some(d) => {
                writeln!(f, "  delta_T = {}", d.delta_t)?;
                writeln!(f, "  delta_K = {}", d.delta_k)?;
                writeln!(f, "  genus(K) = {} [(p+1)/2: {}]", d.genus_k, d.genus_formula)?;
                writeln!(f, "  delta_K(1) = 1: {}", d.value_at_one)?;
                writeln!(
                    f,
                    "  L-space coefficient form: {}",
                    if d.lspace_form.ok { "pass".to_string() } else { format!("fail ({:?})", d.lspace_form.violation) }
                )?;
                writeln!(f, "  delta_K = delta_T mod t^p - 1: {}", d.cyclic_match)?;
                writeln!(f, "  reduced coefficients in {{0, +-1}}: {}", d.tilde_constraints)?;
            }
            None => {
                writeln!(
                    f,
                    "  alexander data: not computed ({})",
                    self.alexander_note.clone().unwrap_or_default()
                )?;
            }
        }
        writeln!(f, "  HFK rank (reported metadata): {}", self.hfk_rank_reported)?;
        writeln!(
            f,
            "  tunnel analysis: {} [alpha cover {}, beta cover {}]",
            self.tunnel.verdict, self.tunnel.alpha_cover, self.tunnel.beta_cover
        )?;
        writeln!(
            f,
            "  {}-surgery on companion: {} [modular identity {}, unoriented {}, oriented {}]",
            self.lens_surgery.coefficient,
            self.lens_surgery.result.as_ref().map(|r| r.to_string()).unwrap_or_default(),
            self.lens_surgery.modular_identity,
            self.lens_surgery.unoriented_match,
            self.lens_surgery.oriented_match
        )?;
        writeln!(
            f,
            "  {}-surgery (reducible): {} vs {} [unoriented {}, oriented {}]",
            self.reducible.coefficient,
            self.reducible.result.as_ref().map(|r| r.to_string()).unwrap_or_default(),
            self.reducible.expected,
            self.reducible.unoriented_match,
            self.reducible.oriented_match
        )?;
        writeln!(f, "  homology-sphere classes: {}", format_tagged_set(&self.hsphere_classes))?;
        writeln!(f, "  k^2+k+1 = 0 mod p classes: {}", format_residue_set(&self.berge_vii_at_p))?;
        writeln!(f, "  Tange knots: {TANGE_NOTE}")?;
        for c in &self.caveats {
            writeln!(f, "  caveat: {c}")?;
        }
        Ok(())
    }
}

/// One report per `n` in `[n_min, n_max]`, in order.
pub fn census_scan<T: Int>(n_min: &T, n_max: &T) -> Result<Vec<FamilyReport<T>>> {
    if n_min > n_max {
        return Err(Error::OutOfRange {
            what: "census_scan",
            expected: "n_min <= n_max",
            got: format!("[{n_min}, {n_max}]"),
        });
    }
    let mut out = Vec::new();
    let mut n = n_min.clone();
    while n <= *n_max {
        out.push(family_report(&n));
        n = n + T::one();
    }
    Ok(out)
}

/// JSON-lines rendering (one report per line).
pub fn census_to_jsonl<T: Int>(reports: &[FamilyReport<T>]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_json().to_string());
        out.push('\n');
    }
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// CSV rendering with header (polynomials in canonical text form).
pub fn census_to_csv<T: Int>(reports: &[FamilyReport<T>]) -> String {
    let mut out = String::new();
    out.push_str(&FamilyReport::<T>::csv_header().join(","));
    out.push('\n');
    for r in reports {
        let record: Vec<String> = r.to_csv_record().iter().map(|s| csv_escape(s)).collect();
        out.push_str(&record.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;

    #[test]
    fn params_examples() {
        assert_eq!(family_params(&1i64), (5, -1));
        assert_eq!(family_params(&0i64), (1, 2));
        assert_eq!(family_params(&2i64), (15, -4));
        assert_eq!(family_params(&-3i64), (25, 11));
    }

    #[test]
    fn torus_knot_examples() {
        assert_eq!(family_torus_knot(&1i64), (4, 1));
        assert_eq!(family_torus_knot(&2i64), (7, 2));
        assert_eq!(family_torus_knot(&3i64), (10, 3));
        // gcd(3n+1, n) = gcd(1, n) = 1 for every n.
        for n in -100i64..=100 {
            let (a, b) = family_torus_knot(&n);
            assert_eq!(a.gcd(&b), 1, "n={n}");
        }
    }

    #[test]
    fn cf_identity_examples() {
        assert!(verify_cf_identity(&1i64).unwrap());
        assert!(verify_cf_identity(&2i64).unwrap());
        // n = -1: cf_eval([-1,-1,1,3]) = -3/5 = -(p/q) at (p, q) = (3, 5).
        assert_eq!(
            cf_eval(&[-1i64, -1, 1, 3]).unwrap(),
            Rational::new(-3, 5).unwrap()
        );
        assert!(verify_cf_identity(&-1i64).unwrap());
    }

    #[test]
    fn alexander_examples() {
        let (dt, dk) = family_alexander(&1i64).unwrap();
        assert_eq!(dt, LaurentPoly::one());
        assert_eq!(dk, "t^3 - t^2 + 1 - t^-2 + t^-3".parse().unwrap());

        let (dt, dk) = family_alexander(&2i64).unwrap();
        assert_eq!(dt.degree_span(), 6);
        assert_eq!(dk.max_exp(), Some(8));
        assert_eq!(dk.eval_at_one(), 1);

        assert!(family_alexander(&0i64).is_err());
    }

    #[test]
    fn report_n1() {
        let r = family_report(&1i64);
        assert_eq!((r.p, r.q), (5, -1));
        assert!(r.berge_vii_at_p.is_empty());
        let d = r.alexander.as_ref().unwrap();
        assert_eq!(d.delta_k, "t^3 - t^2 + 1 - t^-2 + t^-3".parse().unwrap());
        assert_eq!(d.genus_k, 3);
        assert!(r.verification_failures().is_empty(), "{:?}", r.verification_failures());
    }

    #[test]
    fn report_n5() {
        let r = family_report(&5i64);
        assert_eq!((r.p, r.q), (81, -13));
        assert!(r.tunnel.verdict.is_tunnel_two());
        assert_eq!(r.alexander.as_ref().unwrap().genus_k, 41);
        assert!(r.verification_failures().is_empty(), "{:?}", r.verification_failures());
    }

    #[test]
    fn report_n2_reducible() {
        let r = family_report(&2i64);
        assert!(r.reducible.unoriented_match.passed());
        let expected: LensSum<i64> = "L(2,1) # L(7,3)".parse().unwrap();
        assert!(r.reducible.expected.sum_equivalent(&expected, true));
        assert!(r.verification_failures().is_empty(), "{:?}", r.verification_failures());
    }

    #[test]
    fn reports_down_to_negative_n() {
        for n in -10i64..=10 {
            let r = family_report(&n);
            let failures = r.verification_failures();
            assert!(failures.is_empty(), "n={n}: {failures:?}");
            if n <= 0 {
                assert!(r.companion_mirrored);
            }
            if n == 0 {
                assert!(r.alexander.is_none());
                assert!(r.alexander_note.is_some());
            } else {
                assert!(r.alexander.is_some(), "n={n}: {:?}", r.alexander_note);
            }
        }
    }

    #[test]
    fn census_examples() {
        assert_eq!(census_scan(&1i64, &1).unwrap().len(), 1);
        let reports = census_scan(&-3i64, &3).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| !r.tunnel.verdict.is_tunnel_two()));
        let reports = census_scan(&4i64, &10).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| r.tunnel.verdict.is_tunnel_two()));
        assert!(reports
            .iter()
            .all(|r| r.verification_failures().is_empty()));
        assert!(census_scan(&3i64, &1).is_err());
    }

    #[test]
    fn jsonl_and_csv_render() {
        let reports = census_scan(&1i64, &2).unwrap();
        let jsonl = census_to_jsonl(&reports);
        assert_eq!(jsonl.lines().count(), 2);
        for line in jsonl.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert!(v.get("n").is_some());
            // polynomial pairs round-trip through the parser
            let pairs = &v["alexander"]["delta_k"]["pairs"];
            let poly = LaurentPoly::<i64>::from_json(pairs).unwrap();
            let text: LaurentPoly<i64> =
                v["alexander"]["delta_k"]["text"].as_str().unwrap().parse().unwrap();
            assert_eq!(poly, text);
        }
        let csv = census_to_csv(&reports);
        assert_eq!(csv.lines().count(), 3);
        assert_eq!(
            csv.lines().next().unwrap().split(',').count(),
            FamilyReport::<i64>::csv_header().len()
        );
    }

    #[test]
    fn hfk_rank_is_metadata() {
        for n in 1i64..=20 {
            let r = family_report(&n);
            assert_eq!(r.hfk_rank_reported, r.p + 2);
        }
    }
}
