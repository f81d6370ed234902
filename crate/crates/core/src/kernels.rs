//! Distinguished kernel elements, dominant-part decompositions and membership
//! tests for the kernels of the screening maps.
//!
//! To every monomial `m` that is dominant at node `i` (all charges `u_{i,k}`
//! nonnegative) the screening map at `i` associates a canonical kernel element
//! obtained by dressing each charged position with a Gaussian-binomial sum:
//!
//! * in the hat ring, [`e_hat`] produces
//!   `m * prod_k sum_{r=0..u_k} t^{r(u_k - r)} [u_k over r] V[i, k+r_i]^r`;
//! * in the `Y`-rings, [`e_y`] produces the same sum with
//!   `A_{i,q^{k+r_i}}^{-r}` in place of `V[i, k+r_i]^r`; its
//!   [`EKind::Prime`] variant rescales each term by `t^{-alpha}`, the unique
//!   exponent making the family invariant under the bar involution.
//!
//! These elements are linearly independent with dominant leading terms, so
//! membership in their span is decided greedily: [`decompose`] repeatedly
//! strips the dominant monomial of highest node charge, and the element lies
//! in the span exactly when the remainder vanishes. [`in_kernel_intersection`]
//! runs the same peeling across all nodes at once, which decides membership in
//! the intersection of all screening kernels.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::cartan::CartanData;
use crate::rings::bichar::BicharError;
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial, SpectralIndex, YMonomial};
use crate::rings::order::{order_le, OrderError, OrderRel, Window};
use crate::scalar::Scalar;
use crate::tpoly::TPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("monomial {monomial} is not dominant at node {node}")]
    NotDominant { node: usize, monomial: String },
    #[error("monomial {target} does not lie below {monomial} through node-{node} steps")]
    NotBelow {
        node: usize,
        monomial: String,
        target: String,
    },
    #[error(transparent)]
    Window(#[from] OrderError),
    #[error(transparent)]
    Bichar(#[from] BicharError),
    #[error("membership loop exceeded {fuel} peels without settling; the input is pathological")]
    FuelExhausted { fuel: u64 },
    #[error("this construction requires a simply-laced Cartan matrix")]
    RequiresSimplyLaced,
}

/// Which of the two `Y`-ring kernel-element normalizations to use. They agree
/// at `t = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EKind {
    Plain,
    Prime,
}

/// Positions `k` with positive charge at node `i`, with their charges.
/// Errors when any charge at node `i` is negative.
fn charged_positions<M: Monomial>(
    cd: &CartanData,
    i: usize,
    m: &M,
) -> Result<Vec<(i64, i64)>, KernelError> {
    let mut out = Vec::new();
    for k in m.u_positions(cd, i) {
        let u = m.u(cd, i, k);
        if u < 0 {
            return Err(KernelError::NotDominant {
                node: i,
                monomial: m.to_string(),
            });
        }
        if u > 0 {
            out.push((k, u));
        }
    }
    Ok(out)
}

/// Canonical hat-ring kernel element of the screening map at node `i`
/// attached to an `i`-dominant monomial.
pub fn e_hat(
    cd: &CartanData,
    i: usize,
    m: &HatMonomial,
) -> Result<Element<HatMonomial, TPoly>, KernelError> {
    cd.check_node(i);
    let positions = charged_positions(cd, i, m)?;
    let ri = cd.r(i);
    let mut out = Element::from_monomial(m.clone());
    for (k, u) in positions {
        let mut factor: Element<HatMonomial, TPoly> = Element::zero();
        for r in 0..=u {
            let c = &TPoly::t_power(r * (u - r)) * &TPoly::gauss_binom(u, r);
            factor.add_term(HatMonomial::v_gen(i, k + ri).pow(r), c);
        }
        out = out.mul(&factor);
    }
    Ok(out)
}

/// Canonical `Y`-ring kernel element at node `i` attached to an `i`-dominant
/// monomial, in either normalization. Generic over the scalar ring; at `i64`
/// both kinds reduce to `m * prod_k (1 + A^{-1})^{u_k}` with binomial
/// coefficients.
pub fn e_y<C: Scalar>(
    cd: &CartanData,
    i: usize,
    m: &YMonomial,
    kind: EKind,
) -> Result<Element<YMonomial, C>, KernelError> {
    cd.check_node(i);
    let positions = charged_positions(cd, i, m)?;
    let ri = cd.r(i);
    let mut out = Element::zero();
    // Odometer over the multiplicity vector (r_1, ..., r_s), 0 <= r_j <= u_j.
    let s = positions.len();
    let mut r = vec![0i64; s];
    loop {
        let mut mono = m.clone();
        let mut coeff = C::one();
        for (j, &(k, u)) in positions.iter().enumerate() {
            mono = mono.mul_a_pow(cd, i, k + ri, -r[j]);
            coeff = coeff
                .mul_ref(&C::t_power(r[j] * (u - r[j])))
                .mul_ref(&C::gauss_binom(u, r[j]));
        }
        if kind == EKind::Prime {
            coeff = coeff.mul_ref(&C::t_power(-alpha_of(cd, i, m, &positions, &r)));
        }
        out.add_term(mono, coeff);
        // advance the odometer
        let mut j = 0;
        loop {
            if j == s {
                return Ok(out);
            }
            if r[j] < positions[j].1 {
                r[j] += 1;
                break;
            }
            r[j] = 0;
            j += 1;
        }
    }
}

/// The symmetrization exponent for a multiplicity vector over the charged
/// positions of `m`: with `p_j = k_j + r_i` the position of the `j`-th
/// `A`-factor and `r_p` its multiplicity,
/// `alpha = sum_j r_{p_j} (u_{i,p_j-r_i}(m) + u_{i,p_j+r_i}(m) - r_{p_j} - r_{p_j-2r_i})`.
fn alpha_of(
    cd: &CartanData,
    i: usize,
    m: &YMonomial,
    positions: &[(i64, i64)],
    r: &[i64],
) -> i64 {
    let ri = cd.r(i);
    let mult = |p: i64| -> i64 {
        positions
            .iter()
            .position(|&(k, _)| k + ri == p)
            .map(|j| r[j])
            .unwrap_or(0)
    };
    let mut alpha = 0;
    for (j, &(k, _)) in positions.iter().enumerate() {
        let p = k + ri;
        alpha += r[j] * (m.u(cd, i, p - ri) + m.u(cd, i, p + ri) - r[j] - mult(p - 2 * ri));
    }
    alpha
}

/// Symmetrization exponent for a single target monomial `target <= m`, read
/// off the order certificate. Errors unless the certificate exists and uses
/// only node-`i` steps (which is automatic for targets occurring in the
/// kernel element of `m`).
pub fn symmetrization_exponent(
    cd: &CartanData,
    i: usize,
    m: &YMonomial,
    target: &YMonomial,
    window: Window,
) -> Result<i64, KernelError> {
    cd.check_node(i);
    let not_below = || KernelError::NotBelow {
        node: i,
        monomial: m.to_string(),
        target: target.to_string(),
    };
    let cert = match order_le(cd, target, m, window)? {
        OrderRel::Equal => BTreeMap::new(),
        OrderRel::Le { cert } => cert,
        _ => return Err(not_below()),
    };
    if cert.keys().any(|s| s.node != i) {
        return Err(not_below());
    }
    let ri = cd.r(i);
    let mult = |p: i64| cert.get(&SpectralIndex { node: i, k: p }).copied().unwrap_or(0);
    let mut alpha = 0;
    for (&s, &rp) in cert.iter() {
        let p = s.k;
        alpha += rp * (m.u(cd, i, p - ri) + m.u(cd, i, p + ri) - rp - mult(p - 2 * ri));
    }
    Ok(alpha)
}

/// Result of stripping the span of canonical kernel elements from an element:
/// `x = sum_m dominant[m] * E(m) + remainder`, with the remainder free of
/// `i`-dominant monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<M: Monomial, C: Scalar> {
    pub dominant: BTreeMap<M, C>,
    pub remainder: Element<M, C>,
}

impl<M: Monomial, C: Scalar> Decomposition<M, C> {
    /// True when the element lay in the span of the canonical kernel elements,
    /// i.e. in the kernel of the screening map at the node.
    pub fn is_complete(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Greedy peeling against an arbitrary expander: repeatedly picks the
/// `i`-dominant monomial of highest node-`i` charge (largest monomial on
/// ties), records its coefficient and subtracts `coeff * expand(m)`.
pub fn decompose_with<M, C, F>(
    cd: &CartanData,
    i: usize,
    x: &Element<M, C>,
    expand: F,
) -> Result<Decomposition<M, C>, KernelError>
where
    M: Monomial,
    C: Scalar,
    F: Fn(&M) -> Result<Element<M, C>, KernelError>,
{
    cd.check_node(i);
    let mut rest = x.clone();
    let mut dominant: BTreeMap<M, C> = BTreeMap::new();
    loop {
        let head = rest
            .monomials()
            .filter(|m| m.is_dominant(cd, i))
            .map(|m| (m.wt(cd, i), m.clone()))
            .max();
        let Some((_, m)) = head else {
            return Ok(Decomposition { dominant, remainder: rest });
        };
        let c = rest.coeff(&m);
        rest = rest.sub(&expand(&m)?.scale(&c));
        let slot = dominant.entry(m).or_insert_with(C::zero);
        *slot = slot.clone() + c;
    }
}

/// Decomposition of a hat-ring element against the node-`i` kernel elements.
pub fn decompose_hat(
    cd: &CartanData,
    i: usize,
    x: &Element<HatMonomial, TPoly>,
) -> Result<Decomposition<HatMonomial, TPoly>, KernelError> {
    decompose_with(cd, i, x, |m| e_hat(cd, i, m))
}

/// Decomposition of a `Y`-ring element against the node-`i` kernel elements
/// of the chosen kind. Works for both the deformed and classical scalars.
pub fn decompose_y<C: Scalar>(
    cd: &CartanData,
    i: usize,
    x: &Element<YMonomial, C>,
    kind: EKind,
) -> Result<Decomposition<YMonomial, C>, KernelError> {
    decompose_with(cd, i, x, |m| e_y(cd, i, m, kind))
}

/// Comparison window that surely covers both supports, for internal
/// maximality tests.
fn covering_order(cd: &CartanData, m1: &YMonomial, m2: &YMonomial) -> OrderRel {
    let mut lo = 0;
    let mut hi = 0;
    for m in [m1, m2] {
        if let Some((a, b)) = m.k_range() {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    order_le(cd, m1, m2, Window::new(lo, hi)).expect("covering window cannot be too small")
}

/// Outcome of checking the factorized twisted-product form of a hat-ring
/// kernel element against the direct Gaussian-binomial formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductFormOutcome {
    /// The factorized product equals `t^beta` times the direct formula.
    Match { beta: i64 },
    /// They differ; `detail` describes the first discrepancy.
    Mismatch { detail: String },
}

/// Rebuilds the node-`i` kernel element of an `i`-dominant monomial as one
/// long twisted product of generators and binomial blocks, and compares it
/// with [`e_hat`]. Simply-laced types only (the twist is the Nakajima
/// bicharacter).
///
/// The factor layout, left to right: first the `W[j,*]` variables at foreign
/// nodes, then every `V[j,*]` at nodes not adjacent to `i`, then for each
/// lattice level `K` in increasing order a block built from the level's
/// generator sequence `Z_{K,1..z_K}`, which lists `w_{i,K}` copies of `W[i,K]`
/// followed by the `V[j,K]` at adjacent nodes. Writing `u_K = u_{i,K}(m)` and
/// `v_K = v_{i,K}(m)`, the block at `K` is
///
/// ```text
/// prod_{l=1..u_K}  Z_{K,l} * (1 + V[i,K+1])
///   * prod_{s=1..v_{K+1}}  Z_{K, u_K+s} * V[i,K+1] * Z_{K+2, u_{K+2}+v_{K+3}+s}
/// ```
///
/// and the level identity `z_K = u_K + v_{K+1} + v_{K-1}` guarantees the
/// sequences are consumed exactly.
pub fn verify_product_form(
    cd: &CartanData,
    i: usize,
    m: &HatMonomial,
) -> Result<ProductFormOutcome, KernelError> {
    use crate::rings::bichar::{star_mul, Bichar};

    cd.check_node(i);
    if !cd.is_simply_laced() {
        return Err(KernelError::RequiresSimplyLaced);
    }
    let direct = e_hat(cd, i, m)?;

    let u = |k: i64| m.u(cd, i, k);
    let v = |k: i64| m.v_exp(i, k);

    // Generator sequences Z_{K,*} per level, 1-based via index - 1.
    let mut zseq: BTreeMap<i64, Vec<HatMonomial>> = BTreeMap::new();
    for (s, e) in m.w_iter().filter(|(s, _)| s.node == i) {
        let row = zseq.entry(s.k).or_default();
        for _ in 0..e {
            row.push(HatMonomial::w_gen(i, s.k));
        }
    }
    for j in cd.nodes() {
        if j == i || cd.c(j, i) != -1 {
            continue;
        }
        for (s, e) in m.v_iter().filter(|(s, _)| s.node == j) {
            let row = zseq.entry(s.k).or_default();
            for _ in 0..e {
                row.push(HatMonomial::v_gen(j, s.k));
            }
        }
    }
    for (&kk, row) in zseq.iter() {
        debug_assert_eq!(
            row.len() as i64,
            u(kk) + v(kk + 1) + v(kk - 1),
            "level identity for the generator sequence at K = {kk}"
        );
    }

    let star = |x: &Element<HatMonomial, TPoly>, y: &Element<HatMonomial, TPoly>| {
        star_mul(cd, Bichar::Nakajima, x, y).expect("simply laced was checked")
    };
    let mono = |mm: &HatMonomial| Element::<HatMonomial, TPoly>::from_monomial(mm.clone());

    let mut acc = Element::<HatMonomial, TPoly>::one();
    // Foreign W variables, then V variables at non-adjacent nodes.
    for (s, e) in m.w_iter().filter(|(s, _)| s.node != i) {
        for _ in 0..e {
            acc = star(&acc, &mono(&HatMonomial::w_gen(s.node, s.k)));
        }
    }
    for (s, e) in m.v_iter().filter(|(s, _)| s.node != i && cd.c(s.node, i) == 0) {
        for _ in 0..e {
            acc = star(&acc, &mono(&HatMonomial::v_gen(s.node, s.k)));
        }
    }

    // Levels that contribute a block.
    let levels: std::collections::BTreeSet<i64> = m
        .u_positions(cd, i)
        .into_iter()
        .filter(|&k| u(k) != 0)
        .chain(m.v_iter().filter(|(s, _)| s.node == i).map(|(s, _)| s.k - 1))
        .collect();
    let zat = |k: i64, idx: i64| -> Element<HatMonomial, TPoly> {
        let row = zseq.get(&k).unwrap_or_else(|| {
            panic!("generator sequence missing at level {k} (index {idx})")
        });
        mono(&row[(idx - 1) as usize])
    };
    let one_plus_v = |k: i64| {
        let mut f = Element::<HatMonomial, TPoly>::one();
        f.add_term(HatMonomial::v_gen(i, k), TPoly::constant(1));
        f
    };
    for &kk in &levels {
        for l in 1..=u(kk) {
            acc = star(&acc, &zat(kk, l));
            acc = star(&acc, &one_plus_v(kk + 1));
        }
        for s in 1..=v(kk + 1) {
            acc = star(&acc, &zat(kk, u(kk) + s));
            acc = star(&acc, &mono(&HatMonomial::v_gen(i, kk + 1)));
            acc = star(&acc, &zat(kk + 2, u(kk + 2) + v(kk + 3) + s));
        }
    }

    // Compare acc with t^beta * direct.
    let mismatch = |detail: String| Ok(ProductFormOutcome::Mismatch { detail });
    if acc.len() != direct.len() {
        return mismatch(format!(
            "term counts differ: product has {}, direct formula has {}",
            acc.len(),
            direct.len()
        ));
    }
    let mut beta: Option<i64> = None;
    for (mm, c_direct) in direct.iter() {
        let c_acc = acc.coeff(mm);
        if c_acc.is_zero() {
            return mismatch(format!("monomial {mm} is missing from the product"));
        }
        let (Some(lo_a), Some(lo_d)) = (c_acc.min_exp(), c_direct.min_exp()) else {
            unreachable!("stored coefficients are nonzero");
        };
        let b = lo_a - lo_d;
        if c_acc != c_direct.shift(b) {
            return mismatch(format!(
                "coefficient of {mm} is {c_acc}, not a t-power multiple of {c_direct}"
            ));
        }
        match beta {
            None => beta = Some(b),
            Some(prev) if prev != b => {
                return mismatch(format!(
                    "inconsistent t-power offsets: {prev} vs {b} at {mm}"
                ));
            }
            Some(_) => {}
        }
    }
    Ok(ProductFormOutcome::Match { beta: beta.unwrap_or(0) })
}

const MEMBERSHIP_FUEL: u64 = 10_000;

/// Decides membership in the intersection of all screening kernels of the
/// `Y`-ring, by peeling canonical kernel elements off maximal monomials.
///
/// The `window` must contain the support of `x`. Members are recognized in
/// finitely many peels; a non-member is detected as soon as a maximal
/// monomial of the residual fails dominance at some node. A fuel bound guards
/// the loop, so the function reports an error rather than a wrong answer on
/// inputs engineered to keep the residual churning.
pub fn in_kernel_intersection<C: Scalar>(
    cd: &CartanData,
    x: &Element<YMonomial, C>,
    kind: EKind,
    window: Window,
) -> Result<bool, KernelError> {
    let mut lo = window.kmin;
    let mut hi = window.kmax;
    for m in x.monomials() {
        if let Some((a, b)) = m.k_range() {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    if lo < window.kmin || hi > window.kmax {
        return Err(KernelError::Window(OrderError::WindowTooSmall {
            kmin: window.kmin,
            kmax: window.kmax,
            need_min: lo,
            need_max: hi,
        }));
    }

    let mut rest = x.clone();
    for _ in 0..MEMBERSHIP_FUEL {
        if rest.is_scalar() {
            return Ok(true);
        }
        let candidates: Vec<YMonomial> = rest
            .monomials()
            .filter(|m| !m.is_unit())
            .cloned()
            .collect();
        let head = candidates
            .iter()
            .rev()
            .find(|m| {
                candidates.iter().all(|m2| {
                    m2 == *m || !matches!(covering_order(cd, m, m2), OrderRel::Le { .. })
                })
            })
            .expect("a non-scalar element has a maximal non-unit monomial")
            .clone();
        if !head.is_dominant_all(cd) {
            return Ok(false);
        }
        let i0 = cd
            .nodes()
            .find(|&i| head.wt(cd, i) > 0)
            .expect("a dominant non-unit monomial has positive charge at some node");
        let c = rest.coeff(&head);
        rest = rest.sub(&e_y(cd, i0, &head, kind)?.scale(&c));
    }
    Err(KernelError::FuelExhausted { fuel: MEMBERSHIP_FUEL })
}
