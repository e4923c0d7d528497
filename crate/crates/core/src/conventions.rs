//! Sign-convention ledger. Single source of truth; every module that
//! touches lens spaces or surgery coefficients goes through here.
//!
//! * `L(p, q)` is the result of `-p/q`-surgery on the unknot. Hence
//!   integral `m`-surgery on the unknot is `L(m, -1)`.
//! * `L(-p, -q)` describes the same surgery coefficient as `L(p, q)`;
//!   flipping the signs of both parameters is relabeling, not mirroring.
//!   Canonicalization nevertheless records that a sign flip happened.
//! * Replacing `q` by `q mod p` is residue reduction and is NOT a mirror.
//! * Replacing `q` by `-q` IS the mirror: the mirror of `L(p, q)` is
//!   `L(p, -q)`.
//! * The two-bridge link `B(p, q)` is the link whose double branched
//!   cover is `L(p, q)`; its plat is described by a continued fraction
//!   for `-p/q`.

use crate::num::Int;

/// Raw `(p, q)` pair for the lens space produced by integral `m`-surgery
/// on the unknot: `L(m, -1)`.
pub fn unknot_surgery_raw<T: Int>(m: T) -> (T, T) {
    (m, -T::one())
}

/// Raw mirror: `(p, q)` goes to `(p, -q)`.
pub fn mirror_raw<T: Int>(p: T, q: T) -> (T, T) {
    (p, -q)
}

/// Raw relabeling that makes `p` non-negative without changing the
/// oriented homeomorphism type: `(-p, q)` goes to `(p, -q)`.
pub fn relabel_nonneg_raw<T: Int>(p: T, q: T) -> (T, T) {
    if p.is_negative() {
        (-p, -q)
    } else {
        (p, q)
    }
}
