//! Bicharacters on hat monomials and the twisted products they induce.
//!
//! A bicharacter `d` assigns an integer `d(m1, m2)` to a pair of hat monomials,
//! additive in each argument. The twisted product is then
//! `m1 * m2 = t^{2 d(m1, m2)} m1 m2`, extended bilinearly; associativity is
//! exactly the bi-additivity of `d`.
//!
//! Three choices are implemented:
//!
//! * [`Bichar::Zero`]: the plain commutative product;
//! * [`Bichar::Nakajima`]: `d(m1, m2) = sum_i ( v_{i,aq}(m1) u_{i,a}(m2) +
//!   w_{i,aq}(m1) v_{i,a}(m2) )`, summed over nodes and lattice points; only
//!   defined when the Cartan matrix is simply laced;
//! * [`Bichar::Node(i)`]: the single-node variant
//!   `d_i(m1, m2) = sum_a ( v_{i,aq_i}(m1) u_{i,a}(m2) + w_{i,aq_i}(m1) v_{i,a}(m2)
//!   + (u_{i,aq_i} - w_{i,aq_i} + v_{i,a} + v_{i,aq_i^2})(m1) v_{i,a}(m2) )`,
//!   defined for every finite type.
//!
//! Each evaluation also has an equivalent second expression obtained by
//! shifting the summation variable; [`d_eval_alt`] computes that form so tests
//! can confirm the two agree on random inputs.

use thiserror::Error;

use crate::cartan::CartanData;
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial};
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BicharError {
    #[error("the Nakajima bicharacter requires a simply-laced Cartan matrix")]
    RequiresSimplyLaced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bichar {
    /// Identically zero; the twisted product degenerates to the plain one.
    Zero,
    /// Simply-laced types only.
    Nakajima,
    /// Concentrated on one node, available in every finite type.
    Node(usize),
}

impl Bichar {
    /// Checks that this bicharacter makes sense over the given Cartan datum.
    pub fn validate(&self, cd: &CartanData) -> Result<(), BicharError> {
        match self {
            Bichar::Zero => Ok(()),
            Bichar::Nakajima => {
                if cd.is_simply_laced() {
                    Ok(())
                } else {
                    Err(BicharError::RequiresSimplyLaced)
                }
            }
            Bichar::Node(i) => {
                cd.check_node(*i);
                Ok(())
            }
        }
    }
}

/// Evaluates the bicharacter on a pair of monomials.
pub fn d_eval(
    cd: &CartanData,
    b: Bichar,
    m1: &HatMonomial,
    m2: &HatMonomial,
) -> Result<i64, BicharError> {
    b.validate(cd)?;
    Ok(d_unchecked(cd, b, m1, m2))
}

pub(crate) fn d_unchecked(cd: &CartanData, b: Bichar, m1: &HatMonomial, m2: &HatMonomial) -> i64 {
    match b {
        Bichar::Zero => 0,
        Bichar::Nakajima => {
            let mut d = 0;
            for (s, e) in m1.v_iter() {
                d += e * m2.u(cd, s.node, s.k - 1);
            }
            for (s, e) in m1.w_iter() {
                d += e * m2.v_exp(s.node, s.k - 1);
            }
            d
        }
        Bichar::Node(i) => {
            let r = cd.r(i);
            let mut d = 0;
            for (s, e) in m1.v_iter().filter(|(s, _)| s.node == i) {
                d += e * m2.u(cd, i, s.k - r);
            }
            for (s, e) in m1.w_iter().filter(|(s, _)| s.node == i) {
                d += e * m2.v_exp(i, s.k - r);
            }
            for (s, e2) in m2.v_iter().filter(|(s, _)| s.node == i) {
                let k = s.k;
                d += e2
                    * (m1.u(cd, i, k + r) - m1.w_exp(i, k + r)
                        + m1.v_exp(i, k)
                        + m1.v_exp(i, k + 2 * r));
            }
            d
        }
    }
}

/// Same value as [`d_eval`], computed from the shifted-index form of each sum.
pub fn d_eval_alt(
    cd: &CartanData,
    b: Bichar,
    m1: &HatMonomial,
    m2: &HatMonomial,
) -> Result<i64, BicharError> {
    b.validate(cd)?;
    Ok(match b {
        Bichar::Zero => 0,
        Bichar::Nakajima => {
            let mut d = 0;
            for (s, e2) in m2.v_iter() {
                d += m1.u(cd, s.node, s.k + 1) * e2;
            }
            for (s, e2) in m2.w_iter() {
                d += m1.v_exp(s.node, s.k + 1) * e2;
            }
            d
        }
        Bichar::Node(i) => {
            let r = cd.r(i);
            let mut d = 0;
            for (s, e2) in m2.v_iter().filter(|(s, _)| s.node == i) {
                d += m1.u(cd, i, s.k + r) * e2;
            }
            for (s, e2) in m2.w_iter().filter(|(s, _)| s.node == i) {
                d += m1.v_exp(i, s.k + r) * e2;
            }
            for (s, e1) in m1.v_iter().filter(|(s, _)| s.node == i) {
                let k = s.k;
                d += e1
                    * (m2.u(cd, i, k - r) - m2.w_exp(i, k - r)
                        + m2.v_exp(i, k - 2 * r)
                        + m2.v_exp(i, k));
            }
            d
        }
    })
}

/// Twisted product `x * y`, term by term `t^{2 d(m1, m2)} m1 m2`.
///
/// With [`Bichar::Zero`] this is the plain commutative product. The scalar
/// type is generic; in the classical ring the twist factor collapses to 1.
pub fn star_mul<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    x: &Element<HatMonomial, C>,
    y: &Element<HatMonomial, C>,
) -> Result<Element<HatMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Element::zero();
    for (m1, c1) in x.iter() {
        for (m2, c2) in y.iter() {
            let tw = C::t_power(2 * d_unchecked(cd, b, m1, m2));
            out.add_term(m1.mul(m2), c1.mul_ref(c2).mul_ref(&tw));
        }
    }
    Ok(out)
}
