//! Partial order on `Y`-monomials by products of `A^{-1}` factors.
//!
//! `m1 <= m2` means `m1 = m2 * prod A_{i,q^l}^{-r_{i,l}}` with all
//! `r_{i,l} >= 0`. The certificate map `(i, l) -> r_{i,l}` is unique when it
//! exists, and [`order_le`] either produces it, detects equality, detects the
//! reversed relation, or reports the pair incomparable.
//!
//! The decision procedure is an echelon scan of the exponent vector of
//! `m2 / m1` from the top lattice position down. At the current maximum
//! position `K` the only `A`-factor able to contribute is `A_{i, K - r_i}`
//! (its own outer exponent; neighbour entries of any `A_{j,l}` stay strictly
//! below `l + r_j` because finite type forces `r_i = |C[j][i]| * r_j` whenever
//! `C[j][i] < -1`). Each top entry therefore forces an exact peel, the maximum
//! strictly decreases, and a genuine certificate can never push the residual
//! below the initial minimum position, so dropping under it proves
//! incomparability.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cartan::CartanData;
use crate::rings::monomial::{SpectralIndex, YMonomial};

/// Inclusive lattice range `[kmin, kmax]` a computation promises to stay in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub kmin: i64,
    pub kmax: i64,
}

impl Window {
    pub fn new(kmin: i64, kmax: i64) -> Self {
        assert!(kmin <= kmax, "window bounds out of order: {kmin} > {kmax}");
        Window { kmin, kmax }
    }

    pub fn contains(&self, k: i64) -> bool {
        (self.kmin..=self.kmax).contains(&k)
    }
}

impl Default for Window {
    /// The CLI default, `[-6, 6]`.
    fn default() -> Self {
        Window::new(-6, 6)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error(
        "window [{kmin}, {kmax}] too small for the monomial supports; enlarge to [{need_min}, {need_max}]"
    )]
    WindowTooSmall {
        kmin: i64,
        kmax: i64,
        need_min: i64,
        need_max: i64,
    },
}

/// Outcome of an order comparison. Certificates map the `A`-position `(i, l)`
/// standing for `A_{i,q^l}` to its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderRel {
    Equal,
    /// `m1 = m2 * prod A^{-cert}`.
    Le { cert: BTreeMap<SpectralIndex, i64> },
    /// `m2 = m1 * prod A^{-cert}`.
    Ge { cert: BTreeMap<SpectralIndex, i64> },
    Incomparable,
}

impl OrderRel {
    pub fn is_le(&self) -> bool {
        matches!(self, OrderRel::Equal | OrderRel::Le { .. })
    }

    pub fn is_ge(&self) -> bool {
        matches!(self, OrderRel::Equal | OrderRel::Ge { .. })
    }
}

/// Compares two `Y`-monomials, requiring both supports to lie inside `window`.
pub fn order_le(
    cd: &CartanData,
    m1: &YMonomial,
    m2: &YMonomial,
    window: Window,
) -> Result<OrderRel, OrderError> {
    let mut need_min = window.kmin;
    let mut need_max = window.kmax;
    for m in [m1, m2] {
        if let Some((lo, hi)) = m.k_range() {
            need_min = need_min.min(lo);
            need_max = need_max.max(hi);
        }
    }
    if need_min < window.kmin || need_max > window.kmax {
        return Err(OrderError::WindowTooSmall {
            kmin: window.kmin,
            kmax: window.kmax,
            need_min,
            need_max,
        });
    }

    let mut p = m2.div(m1);
    let Some((min0, _)) = p.k_range() else {
        return Ok(OrderRel::Equal);
    };

    let mut cert: BTreeMap<SpectralIndex, i64> = BTreeMap::new();
    let mut sign: Option<i64> = None;
    while let Some((_, top)) = p.k_range() {
        if top < min0 {
            return Ok(OrderRel::Incomparable);
        }
        let level: Vec<(usize, i64)> = cd
            .nodes()
            .map(|i| (i, p.exp(i, top)))
            .filter(|&(_, e)| e != 0)
            .collect();
        for &(i, e) in &level {
            let s = e.signum();
            match sign {
                None => sign = Some(s),
                Some(prev) if prev != s => return Ok(OrderRel::Incomparable),
                Some(_) => {}
            }
            let l = top - cd.r(i);
            *cert.entry(SpectralIndex { node: i, k: l }).or_insert(0) += e.abs();
            p = p.mul_a_pow(cd, i, l, -e);
        }
    }

    match sign {
        Some(s) if s > 0 => Ok(OrderRel::Le { cert }),
        Some(_) => Ok(OrderRel::Ge { cert }),
        None => unreachable!("a nonempty residual performs at least one peel"),
    }
}
