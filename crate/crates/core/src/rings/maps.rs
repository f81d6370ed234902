//! Ring and module maps between the hat ring, the deformed `Y`-ring and the
//! classical `Y`-ring, plus the bar involutions.
//!
//! Monomial images are driven by the charge function: the image of a hat
//! monomial `m = W^w V^v` in the `Y`-variables is `Y^w prod A^{-v}`, which by
//! construction has exponent `u_{i,k}(m)` at every lattice point. The maps
//! differ only in what happens to coefficients:
//!
//! * [`pi_tilde`]: evaluate coefficients at `t = 1`, landing in the classical ring;
//! * [`hat_pi_d`]: keep coefficients, twisting each term by `t^{-d(m, m)}` for a
//!   chosen bicharacter `d` (with [`Bichar::Zero`] this is a ring morphism of
//!   the twisted product onto the `Y`-ring product);
//! * [`pi_t`]: evaluate `Y`-ring coefficients at `t = 1`;
//! * [`pi_node`]: project onto the subring generated by the node-`i` variables,
//!   replacing each foreign `V[j,kv]` by the `W[i,..]`-pattern selected by
//!   `C[i][j]` so that all node-`i` charges are preserved.

use crate::cartan::CartanData;
use crate::rings::bichar::{d_unchecked, Bichar, BicharError};
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial, YMonomial};
use crate::scalar::Scalar;

/// `Y`-monomial with the same charge profile as the hat monomial `m`, namely
/// `Y^{w-part} * prod A^{-(v-part)}`.
pub fn y_image(cd: &CartanData, m: &HatMonomial) -> YMonomial {
    let mut y = YMonomial::unit();
    for (s, e) in m.w_iter() {
        y = y.mul_y(s.node, s.k, e);
    }
    for (s, e) in m.v_iter() {
        y = y.mul_a_pow(cd, s.node, s.k, -e);
    }
    y
}

/// Classical evaluation map: hat monomials to their `Y`-images, coefficients
/// to their value at `t = 1`. A ring morphism for the plain product.
pub fn pi_tilde<C: Scalar>(
    cd: &CartanData,
    x: &Element<HatMonomial, C>,
) -> Element<YMonomial, i64> {
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        out.add_term(y_image(cd, m), c.eval_one());
    }
    out
}

/// Deformed evaluation map attached to a bicharacter `d`:
/// `m -> t^{-d(m, m)} * (Y-image of m)`, extended linearly over `Z[t, t^{-1}]`.
///
/// For `d = 0` this is a morphism from the twisted ring onto the plain
/// `Y`-ring; for other `d` it is only a map of coefficient modules, which is
/// all the kernel comparisons need.
pub fn hat_pi_d<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    x: &Element<HatMonomial, C>,
) -> Result<Element<YMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        let tw = C::t_power(-d_unchecked(cd, b, m, m));
        out.add_term(y_image(cd, m), c.mul_ref(&tw));
    }
    Ok(out)
}

/// Evaluation of `Y`-ring coefficients at `t = 1`.
pub fn pi_t<C: Scalar>(x: &Element<YMonomial, C>) -> Element<YMonomial, i64> {
    x.map_terms(|m, c| Element::term(m.clone(), c.eval_one()))
}

/// Projection onto the node-`i` subring.
///
/// Per monomial: node-`i` variables survive unchanged, every `W[j,k]` with
/// `j != i` is dropped, and every `V[j,kv]` with `j != i` becomes the pattern
/// selected by `C[i][j]`: nothing for 0, `W[i,kv]` for -1,
/// `W[i,kv-1] W[i,kv+1]` for -2, `W[i,kv-2] W[i,kv] W[i,kv+2]` for -3.
/// Charges at node `i` are preserved exactly.
pub fn pi_node<C: Scalar>(
    cd: &CartanData,
    i: usize,
    x: &Element<HatMonomial, C>,
) -> Element<HatMonomial, C> {
    cd.check_node(i);
    x.map_terms(|m, c| Element::term(pi_node_monomial(cd, i, m), c.clone()))
}

pub(crate) fn pi_node_monomial(cd: &CartanData, i: usize, m: &HatMonomial) -> HatMonomial {
    let mut out = HatMonomial::unit();
    for (s, e) in m.w_iter().filter(|(s, _)| s.node == i) {
        out = out.mul_w(i, s.k, e);
    }
    for (s, e) in m.v_iter() {
        if s.node == i {
            out = out.mul_v(i, s.k, e);
            continue;
        }
        match cd.c(i, s.node) {
            0 => {}
            -1 => out = out.mul_w(i, s.k, e),
            -2 => out = out.mul_w(i, s.k - 1, e).mul_w(i, s.k + 1, e),
            -3 => {
                out = out
                    .mul_w(i, s.k - 2, e)
                    .mul_w(i, s.k, e)
                    .mul_w(i, s.k + 2, e)
            }
            _ => unreachable!("validated Cartan entries lie in {{0,-1,-2,-3}}"),
        }
    }
    out
}

/// Bar involution of the twisted hat ring attached to the bicharacter `d`:
/// antilinear on coefficients (`t -> t^{-1}`) and `m -> t^{2 d(m, m)} m` on
/// monomials.
pub fn bar_hat<C: Scalar>(
    cd: &CartanData,
    b: Bichar,
    x: &Element<HatMonomial, C>,
) -> Result<Element<HatMonomial, C>, BicharError> {
    b.validate(cd)?;
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        let tw = C::t_power(2 * d_unchecked(cd, b, m, m));
        out.add_term(m.clone(), c.bar().mul_ref(&tw));
    }
    Ok(out)
}

/// Bar involution of the `Y`-ring: `t -> t^{-1}` on coefficients, identity on
/// monomials.
pub fn bar_y<C: Scalar>(x: &Element<YMonomial, C>) -> Element<YMonomial, C> {
    x.map_coeffs(|c| c.bar())
}
