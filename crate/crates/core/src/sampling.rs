//! Seeded random generation of monomials and elements for the verification
//! suites. All distributions are deliberately small and window-bounded so
//! failures reproduce byte-for-byte from a seed.

use rand::Rng;

use crate::cartan::CartanData;
use crate::kernels::{e_hat, e_y, EKind};
use crate::rings::monomial::{HatMonomial, Monomial, YMonomial};
use crate::rings::order::Window;
use crate::rings::{HatElement, YClassicalElement, YElement};
use crate::tpoly::TPoly;

fn random_node<R: Rng>(cd: &CartanData, rng: &mut R) -> usize {
    rng.gen_range(1..=cd.n())
}

fn random_k<R: Rng>(window: Window, rng: &mut R) -> i64 {
    rng.gen_range(window.kmin..=window.kmax)
}

/// Nonzero Laurent polynomial with one or two small terms.
pub fn random_tpoly<R: Rng>(rng: &mut R) -> TPoly {
    loop {
        let mut p = TPoly::new();
        for _ in 0..rng.gen_range(1..=2) {
            p.add_term(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        }
        if !num_traits::Zero::is_zero(&p) {
            return p;
        }
    }
}

/// Hat monomial with at most 6 variable entries, exponents in `[0, 3]`.
pub fn random_hat_monomial<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> HatMonomial {
    let mut m = HatMonomial::unit();
    for _ in 0..rng.gen_range(0..=6) {
        let node = random_node(cd, rng);
        let k = random_k(window, rng);
        let e = rng.gen_range(0..=3);
        m = if rng.gen_bool(0.5) {
            m.mul_w(node, k, e)
        } else {
            m.mul_v(node, k, e)
        };
    }
    m
}

/// `Y`-monomial with at most 6 variable entries, exponents in `[-3, 3]`.
pub fn random_y_monomial<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> YMonomial {
    let mut m = YMonomial::unit();
    for _ in 0..rng.gen_range(0..=6) {
        let node = random_node(cd, rng);
        let k = random_k(window, rng);
        m = m.mul_y(node, k, rng.gen_range(-3..=3));
    }
    m
}

/// Element with 1 to 3 random hat-monomial terms and small random coefficients.
pub fn random_hat_element<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> HatElement {
    let mut x = HatElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(random_hat_monomial(cd, window, rng), random_tpoly(rng));
    }
    x
}

/// Like [`random_hat_element`], but every term's positive charge at node `i`
/// is rejection-sampled down to a small total. Greedy decomposition walks
/// branch once per unit of head charge, so uncapped random elements make
/// them combinatorially explosive on multiply-laced matrices.
pub fn random_capped_hat_element<R: Rng>(
    cd: &CartanData,
    i: usize,
    window: Window,
    rng: &mut R,
) -> HatElement {
    let mut x = HatElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        for _ in 0..60 {
            let m = random_hat_monomial(cd, window, rng);
            let charge: i64 = m
                .u_positions(cd, i)
                .into_iter()
                .map(|k| m.u(cd, i, k).max(0))
                .sum();
            if charge <= 6 {
                x.add_term(m, random_tpoly(rng));
                break;
            }
        }
    }
    x
}

/// Element with 1 to 3 random `Y`-monomial terms and small random coefficients.
pub fn random_y_element<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> YElement {
    let mut x = YElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(random_y_monomial(cd, window, rng), random_tpoly(rng));
    }
    x
}

/// Hat monomial dominant at every node: a handful of `W` factors (dominant by
/// construction), then a few `V` factors, each kept only when dominance
/// survives.
pub fn random_dominant_hat<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> HatMonomial {
    let mut m = HatMonomial::unit();
    for _ in 0..rng.gen_range(1..=4) {
        m = m.mul_w(random_node(cd, rng), random_k(window, rng), rng.gen_range(0..=2));
    }
    for _ in 0..rng.gen_range(0..=3) {
        let cand = m.clone().mul_v(random_node(cd, rng), random_k(window, rng), 1);
        if cand.is_dominant_all(cd) {
            m = cand;
        }
    }
    m
}

/// `Y`-monomial dominant at every node: nonnegative `Y` powers, then a few
/// `A^{-1}` factors kept only when dominance survives.
pub fn random_dominant_y<R: Rng>(cd: &CartanData, window: Window, rng: &mut R) -> YMonomial {
    let mut m = YMonomial::unit();
    for _ in 0..rng.gen_range(1..=4) {
        m = m.mul_y(random_node(cd, rng), random_k(window, rng), rng.gen_range(0..=2));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let cand = m.mul_a_pow(cd, random_node(cd, rng), random_k(window, rng), -1);
        if cand.is_dominant_all(cd) {
            m = cand;
        }
    }
    m
}

/// Random combination of up to 3 canonical hat kernel elements at node `i`.
pub fn random_e_span_hat<R: Rng>(
    cd: &CartanData,
    i: usize,
    window: Window,
    rng: &mut R,
) -> HatElement {
    let mut x = HatElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = random_dominant_hat(cd, window, rng);
        let e = e_hat(cd, i, &m).expect("sampler yields dominant monomials");
        x = x.add(&e.scale(&random_tpoly(rng)));
    }
    x
}

fn random_int_coeff<R: Rng>(rng: &mut R) -> i64 {
    loop {
        let c = rng.gen_range(-3..=3);
        if c != 0 {
            return c;
        }
    }
}

/// Element of the classical ring with 1 to 3 random terms and small nonzero
/// integer coefficients.
pub fn random_classical_element<R: Rng>(
    cd: &CartanData,
    window: Window,
    rng: &mut R,
) -> YClassicalElement {
    let mut x = YClassicalElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(random_y_monomial(cd, window, rng), random_int_coeff(rng));
    }
    x
}

/// Random combination of up to 3 classical kernel elements at node `i`.
pub fn random_e_span_classical<R: Rng>(
    cd: &CartanData,
    i: usize,
    window: Window,
    rng: &mut R,
) -> YClassicalElement {
    let mut x = YClassicalElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = random_dominant_y(cd, window, rng);
        let e = e_y::<i64>(cd, i, &m, EKind::Plain).expect("sampler yields dominant monomials");
        x = x.add(&e.scale(&random_int_coeff(rng)));
    }
    x
}

/// Random combination of up to 3 canonical `Y`-ring kernel elements at node
/// `i`, of the chosen kind.
pub fn random_e_span_y<R: Rng>(
    cd: &CartanData,
    i: usize,
    kind: EKind,
    window: Window,
    rng: &mut R,
) -> YElement {
    let mut x = YElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = random_dominant_y(cd, window, rng);
        let e = e_y(cd, i, &m, kind).expect("sampler yields dominant monomials");
        x = x.add(&e.scale(&random_tpoly(rng)));
    }
    x
}

fn within_window(x: &YElement, window: Window) -> bool {
    x.monomials().all(|m| match m.k_range() {
        None => true,
        Some((lo, hi)) => lo >= window.kmin && hi <= window.kmax,
    })
}

/// Random element the greedy peeling procedure recognizes as a kernel
/// intersection member: a combination of canonical kernel elements, each
/// anchored at the first node carrying a positive charge of its head
/// monomial, plus an occasional constant term. The whole support is kept
/// inside `window`.
pub fn random_kernel_intersection_member<R: Rng>(
    cd: &CartanData,
    kind: EKind,
    window: Window,
    rng: &mut R,
) -> YElement {
    let rmax = cd.nodes().map(|i| cd.r(i)).max().unwrap_or(1);
    let margin = rmax + 2;
    let inner = if window.kmin + margin <= window.kmax - margin {
        Window::new(window.kmin + margin, window.kmax - margin)
    } else {
        let mid = (window.kmin + window.kmax) / 2;
        Window::new(mid, mid)
    };
    let mut x = YElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        for _ in 0..40 {
            let m = random_dominant_y(cd, inner, rng);
            if m.is_unit() {
                continue;
            }
            let i = cd
                .nodes()
                .find(|&j| m.wt(cd, j) > 0)
                .expect("a non-unit dominant monomial carries a positive charge");
            let e = e_y(cd, i, &m, kind).expect("sampler yields dominant monomials");
            if within_window(&e, window) {
                x = x.add(&e.scale(&random_tpoly(rng)));
                break;
            }
        }
    }
    if x.is_zero() || rng.gen_bool(0.3) {
        x = x.add(&YElement::scalar(random_tpoly(rng)));
    }
    x
}
