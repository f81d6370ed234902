//! Normal forms of screening elements modulo the quotient relation families.
//!
//! Each relation family identifies `m' S_{i,q^{k+2r_i}}` with a multiple of
//! `m S_{i,q^k}` for suitable `m`, `m'`, so every class has a canonical
//! representative. Two reduction strategies are used:
//!
//! * the hat family rewrites a term downward only while the monomial carries a
//!   factor `V[i, k - r_i]`, so reduction strips `V`-factors until none is
//!   left at the active position;
//! * the `Y`-ring families can rewrite in both directions, so every term is
//!   walked to the anchor position `k* = k mod 2 r_i` in `[0, 2 r_i)`. Since a
//!   relation connects positions exactly `2 r_i` apart, each term reaches its
//!   anchor in finitely many steps and representatives are unique.
//!
//! Normal forms are the workhorse of kernel certification: an element lies in
//! the image of the relation submodule precisely when its normal form is zero,
//! and applying a normal form to a relation generator must return zero (tested
//! extensively).

use std::collections::BTreeMap;

use crate::cartan::CartanData;
use crate::rings::monomial::{HatMonomial, Monomial, YMonomial};
use crate::scalar::Scalar;
use crate::screening::screener::Screener;
use crate::tpoly::TPoly;

/// Which `Y`-ring relation family to reduce by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YNfKind {
    /// The family with the `t^2` cross coefficient (the image of the hat
    /// family under the charge-preserving projection).
    Plain,
    /// The rebalanced family with symmetric `t`-powers, stable under the bar
    /// involution.
    Prime,
}

/// Normal form for the hat-ring family.
///
/// A term `c m S_{i,q^k}` reduces while `m` contains `V[i, k - r_i]`:
/// `c m S_{i,q^k} -> c t^{2 - 2 u_{i,q^k}(m')} m' S_{i,q^{k-2r_i}}` with
/// `m' = m / V[i, k - r_i]`. Processing keys from the top down makes this a
/// single pass, since rewrites only create strictly smaller keys.
pub fn nf_hat_f(cd: &CartanData, s: &Screener<HatMonomial, TPoly>) -> Screener<HatMonomial, TPoly> {
    let i = s.node();
    let r = cd.r(i);
    let mut work: BTreeMap<(i64, HatMonomial), TPoly> = s.terms().clone();
    let mut done = Screener::new(i);
    while let Some(((k, m), c)) = work.pop_last() {
        match m.strip_v(i, k - r) {
            Some(stripped) => {
                let factor = TPoly::t_power(2 - 2 * stripped.u(cd, i, k));
                let coeff = &c * &factor;
                let key = (k - 2 * r, stripped);
                let slot = work.entry(key.clone()).or_insert_with(TPoly::new);
                *slot += &coeff;
                if num_traits::Zero::is_zero(slot) {
                    work.remove(&key);
                }
            }
            None => done.add_term(k, m, c),
        }
    }
    done
}

/// Normal form for a `Y`-ring family: every term is walked to its anchor
/// position `k mod 2 r_i`.
///
/// One downward step multiplies the monomial by `A_{i,q^{k-r_i}}` and the
/// coefficient by `t^{-2 u_{i,q^k}(m)}` (plain family) or
/// `t^{1 + u_{i,q^{k-2r_i}}(m) - u_{i,q^k}(m)}` (prime family); one upward step
/// multiplies by `A_{i,q^{k+r_i}}^{-1}` and by `t^{2 u_{i,q^{k+2r_i}}(m) - 2}`
/// or `t^{u_{i,q^{k+2r_i}}(m) - u_{i,q^k}(m) - 1}`. All factors are evaluated
/// on the monomial before the step. At `t = 1` (scalar `i64`) both families
/// collapse to the same classical reduction.
pub fn nf_y<C: Scalar>(
    cd: &CartanData,
    kind: YNfKind,
    s: &Screener<YMonomial, C>,
) -> Screener<YMonomial, C> {
    let i = s.node();
    let r = cd.r(i);
    let period = 2 * r;
    let mut out = Screener::new(i);
    for (k0, m0, c0) in s.iter() {
        let anchor = k0.rem_euclid(period);
        let mut k = k0;
        let mut m = m0.clone();
        let mut c = c0.clone();
        while k > anchor {
            let e = match kind {
                YNfKind::Plain => -2 * m.u(cd, i, k),
                YNfKind::Prime => 1 + m.u(cd, i, k - period) - m.u(cd, i, k),
            };
            c = c.mul_ref(&C::t_power(e));
            m = m.mul_a_pow(cd, i, k - r, 1);
            k -= period;
        }
        while k < anchor {
            let e = match kind {
                YNfKind::Plain => 2 * m.u(cd, i, k + period) - 2,
                YNfKind::Prime => m.u(cd, i, k + period) - m.u(cd, i, k) - 1,
            };
            c = c.mul_ref(&C::t_power(e));
            m = m.mul_a_pow(cd, i, k + r, -1);
            k += period;
        }
        out.add_term(k, m, c);
    }
    out
}

/// Classical normal form, the `t = 1` instance of [`nf_y`] (both families
/// agree there).
pub fn nf_classical(
    cd: &CartanData,
    s: &Screener<YMonomial, i64>,
) -> Screener<YMonomial, i64> {
    nf_y(cd, YNfKind::Plain, s)
}
