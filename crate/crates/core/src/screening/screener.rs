//! Screening elements: left-normal combinations `sum c * m * S_{i,q^k}`.
//!
//! A [`Screener`] is attached to one node `i` and stores terms keyed by the
//! pair `(k, monomial)`, standing for `c * m * S_{i,q^k}` with the formal
//! symbol `S_{i,q^k}` kept to the right of every ring element. The commutation
//! rule `S_{i,a} x = t^{2 u_{i,a}(x)} x S_{i,a}` is what the module action
//! encodes, so right multiplication picks up a `t`-power per term while left
//! multiplication is plain (or twisted, in the hat ring).
//!
//! The screening map itself sends a monomial `m` to
//! `sum_k [u_{i,q^k}(m)] * m * S_{i,q^k}` and is extended linearly; in the
//! classical ring the `t`-integer collapses to the plain integer charge.

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::CartanData;
use crate::rings::bichar::{d_unchecked, star_mul, Bichar, BicharError};
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial, YMonomial};
use crate::scalar::Scalar;
use crate::tpoly::TPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Screener<M: Monomial, C: Scalar> {
    node: usize,
    terms: BTreeMap<(i64, M), C>,
}

impl<M: Monomial, C: Scalar> Screener<M, C> {
    pub fn new(node: usize) -> Self {
        Screener { node, terms: BTreeMap::new() }
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * m * S_{i,q^k}`, merging and dropping zeros.
    pub fn add_term(&mut self, k: i64, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        let key = (k, m);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn term(node: usize, k: i64, m: M, c: C) -> Self {
        let mut s = Screener::new(node);
        s.add_term(k, m, c);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &M, &C)> + '_ {
        self.terms.iter().map(|((k, m), c)| (*k, m, c))
    }

    pub(crate) fn terms(&self) -> &BTreeMap<(i64, M), C> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.node, other.node, "screening terms live at one node");
        let mut out = self.clone();
        for (k, m, c) in other.iter() {
            out.add_term(k, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.clone().neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut out = Screener::new(self.node);
        for (k, m, c) in self.iter() {
            out.add_term(k, m.clone(), f(c));
        }
        out
    }

    /// Right action of a ring element through the commutation rule:
    /// `(m S_{i,q^k}) * y = t^{2 u_{i,q^k}(m2)} (m m2) S_{i,q^k}` per term,
    /// with the plain product on monomials.
    pub fn right_mul(&self, cd: &CartanData, y: &Element<M, C>) -> Self {
        let mut out = Screener::new(self.node);
        for (k, m, c) in self.iter() {
            for (m2, c2) in y.iter() {
                let tw = C::t_power(2 * m2.u(cd, self.node, k));
                out.add_term(k, m.mul(m2), c.mul_ref(c2).mul_ref(&tw));
            }
        }
        out
    }

    /// Left action `x * (m S) = (x m) S` with the plain product.
    pub fn left_mul(&self, x: &Element<M, C>) -> Self {
        let mut out = Screener::new(self.node);
        for (k, m, c) in self.iter() {
            for (m2, c2) in x.iter() {
                out.add_term(k, m2.mul(m), c2.mul_ref(c));
            }
        }
        out
    }
}

impl<M: Monomial, C: Scalar> fmt::Display for Screener<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, m, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if Scalar::is_one(c) {
            } else if c.is_minus_one() {
                write!(f, "-")?;
            } else {
                write!(f, "{}·", c.render_coeff())?;
            }
            if !m.is_unit() {
                write!(f, "{m}·")?;
            }
            write!(f, "S[{},{}]", self.node, k)?;
        }
        Ok(())
    }
}

/// Screening map at `node`: `m -> sum_k [u_{i,q^k}(m)] m S_{i,q^k}`, extended
/// linearly. Scalars (and any term with all charges zero) screen to zero.
pub fn screen_l<M: Monomial, C: Scalar>(
    cd: &CartanData,
    node: usize,
    x: &Element<M, C>,
) -> Screener<M, C> {
    cd.check_node(node);
    let mut out = Screener::new(node);
    for (m, c) in x.iter() {
        for k in m.u_positions(cd, node) {
            let u = m.u(cd, node, k);
            if u != 0 {
                out.add_term(k, m.clone(), c.mul_ref(&C::t_integer(u)));
            }
        }
    }
    out
}

/// Right action in the twisted hat ring: the monomial product additionally
/// carries the bicharacter twist `t^{2 d(m, m2)}`.
pub fn right_mul_star<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    s: &Screener<HatMonomial, C>,
    y: &Element<HatMonomial, C>,
) -> Result<Screener<HatMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        for (m2, c2) in y.iter() {
            let e = 2 * m2.u(cd, s.node(), k) + 2 * d_unchecked(cd, b, m, m2);
            out.add_term(k, m.mul(m2), c.mul_ref(c2).mul_ref(&C::t_power(e)));
        }
    }
    Ok(out)
}

/// Left action in the twisted hat ring, `x * (m S) = (x *_d m) S`.
pub fn left_mul_star<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    x: &Element<HatMonomial, C>,
    s: &Screener<HatMonomial, C>,
) -> Result<Screener<HatMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        let xm = star_mul(cd, b, x, &Element::from_monomial(m.clone()))?;
        for (m2, c2) in xm.iter() {
            out.add_term(k, m2.clone(), c2.mul_ref(c));
        }
    }
    Ok(out)
}

/// Projection of a hat screening element to the classical ring: monomials to
/// their `Y`-images, coefficients to `t = 1`, the `S`-position untouched.
pub fn project_screener_tilde(
    cd: &CartanData,
    s: &Screener<HatMonomial, TPoly>,
) -> Screener<YMonomial, i64> {
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        out.add_term(k, crate::rings::maps::y_image(cd, m), c.eval_one());
    }
    out
}

/// Projection of a hat screening element to the deformed `Y`-ring, twisting
/// each coefficient by `t^{-d(m, m)}`.
pub fn project_screener_hat_d(
    cd: &CartanData,
    b: Bichar,
    s: &Screener<HatMonomial, TPoly>,
) -> Result<Screener<YMonomial, TPoly>, BicharError> {
    b.validate(cd)?;
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        let tw = TPoly::t_power(-d_unchecked(cd, b, m, m));
        out.add_term(k, crate::rings::maps::y_image(cd, m), &c.clone() * &tw);
    }
    Ok(out)
}

/// Coefficient evaluation `t = 1` on a deformed `Y`-screening element.
pub fn project_screener_t(s: &Screener<YMonomial, TPoly>) -> Screener<YMonomial, i64> {
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        out.add_term(k, m.clone(), c.eval_one());
    }
    out
}

/// Bar involution on hat screening elements for the bicharacter `d`:
/// `c m S_{i,q^k} -> bar(c) t^{2 d(m,m) + 2 u_{i,q^k}(m) - 2} m S_{i,q^k}`.
pub fn bar_screener_hat<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    s: &Screener<HatMonomial, C>,
) -> Result<Screener<HatMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        let e = 2 * d_unchecked(cd, b, m, m) + 2 * m.u(cd, s.node(), k) - 2;
        out.add_term(k, m.clone(), c.bar().mul_ref(&C::t_power(e)));
    }
    Ok(out)
}

/// Bar involution on `Y`-ring screening elements:
/// `c m S_{i,q^k} -> bar(c) t^{2 u_{i,q^k}(m) - 2} m S_{i,q^k}`.
/// On the classical ring (`i64`) this is the identity.
pub fn bar_screener_y<C: Scalar>(
    cd: &CartanData,
    s: &Screener<YMonomial, C>,
) -> Screener<YMonomial, C> {
    let mut out = Screener::new(s.node());
    for (k, m, c) in s.iter() {
        let e = 2 * m.u(cd, s.node(), k) - 2;
        out.add_term(k, m.clone(), c.bar().mul_ref(&C::t_power(e)));
    }
    out
}

/// The two-term combination generating the hat-ring quotient relations:
/// `m V_{i,q^{k+r}} t^{2 u_{i,q^{k+2r}}(m)} S_{i,q^{k+2r}} - t^2 m S_{i,q^k}`.
pub fn gen_hat_f(
    cd: &CartanData,
    i: usize,
    m: &HatMonomial,
    k: i64,
) -> Screener<HatMonomial, TPoly> {
    let r = cd.r(i);
    let mut s = Screener::new(i);
    s.add_term(
        k + 2 * r,
        m.mul(&HatMonomial::v_gen(i, k + r)),
        TPoly::t_power(2 * m.u(cd, i, k + 2 * r)),
    );
    s.add_term(k, m.clone(), -TPoly::t_power(2));
    s
}

/// `Y`-ring analogue of [`gen_hat_f`]:
/// `m A_{i,q^{k+r}}^{-1} t^{2 u_{i,q^{k+2r}}(m)} S_{i,q^{k+2r}} - t^2 m S_{i,q^k}`.
pub fn gen_y_f(cd: &CartanData, i: usize, m: &YMonomial, k: i64) -> Screener<YMonomial, TPoly> {
    let r = cd.r(i);
    let mut s = Screener::new(i);
    s.add_term(
        k + 2 * r,
        m.mul_a_pow(cd, i, k + r, -1),
        TPoly::t_power(2 * m.u(cd, i, k + 2 * r)),
    );
    s.add_term(k, m.clone(), -TPoly::t_power(2));
    s
}

/// Alternative `Y`-ring relation family:
/// `m A_{i,q^{k+r}}^{-1} t^{u_{i,q^{k+2r}}(m) - u_{i,q^k}(m)} S_{i,q^{k+2r}} - t m S_{i,q^k}`.
pub fn gen_y_fprime(
    cd: &CartanData,
    i: usize,
    m: &YMonomial,
    k: i64,
) -> Screener<YMonomial, TPoly> {
    let r = cd.r(i);
    let mut s = Screener::new(i);
    s.add_term(
        k + 2 * r,
        m.mul_a_pow(cd, i, k + r, -1),
        TPoly::t_power(m.u(cd, i, k + 2 * r) - m.u(cd, i, k)),
    );
    s.add_term(k, m.clone(), -TPoly::t_power(1));
    s
}

/// Classical relation family `m S_{i,q^{k+2r}} - m A_{i,q^{k+r}} S_{i,q^k}`.
pub fn gen_classical_f(
    cd: &CartanData,
    i: usize,
    m: &YMonomial,
    k: i64,
) -> Screener<YMonomial, i64> {
    let r = cd.r(i);
    let mut s = Screener::new(i);
    s.add_term(k + 2 * r, m.clone(), 1);
    s.add_term(k, m.mul_a_pow(cd, i, k + r, 1), -1);
    s
}
