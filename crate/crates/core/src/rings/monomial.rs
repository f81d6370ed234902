//! Lattice monomials for the three rings.
//!
//! Variables are indexed by a [`SpectralIndex`] `(node, k)`, the point `q^k` of
//! the spectral lattice attached to a node of the Cartan diagram.
//!
//! [`HatMonomial`] is a product of nonnegative powers of commuting symbols
//! `W[i,k]` and `V[i,k]`. [`YMonomial`] is a Laurent monomial in symbols
//! `Y[i,k]`. Both expose the same interface through [`Monomial`], centred on
//! the charge function `u_{i,k}`: for a `Y`-monomial `u_{i,k}` is simply the
//! exponent of `Y[i,k]`, while for a hat monomial it is the exponent the image
//! `Y^{w} * prod A^{-v}` would carry, computed directly from the `(v, w)` data.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cartan::CartanData;

/// A lattice point `(node, k)` standing for the spectral parameter `q^k` at a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralIndex {
    pub node: usize,
    pub k: i64,
}

/// Shorthand constructor for a [`SpectralIndex`].
pub fn si(node: usize, k: i64) -> SpectralIndex {
    SpectralIndex { node, k }
}

/// Common interface of [`HatMonomial`] and [`YMonomial`].
///
/// The derived `Ord` on each type is the canonical term order used everywhere
/// deterministic iteration or tie-breaking is needed.
pub trait Monomial: Clone + Ord + Eq + fmt::Debug + fmt::Display {
    fn unit() -> Self;

    fn is_unit(&self) -> bool;

    fn mul(&self, other: &Self) -> Self;

    /// Charge of this monomial at `(i, q^k)`.
    fn u(&self, cd: &CartanData, i: usize, k: i64) -> i64;

    /// Every `k` at which `u(cd, i, k)` can be nonzero (a superset is fine;
    /// this returns exactly the candidate positions read off the support).
    fn u_positions(&self, cd: &CartanData, i: usize) -> BTreeSet<i64>;

    /// Total charge at node `i`, the sum of `u(i, k)` over all positions.
    fn wt(&self, cd: &CartanData, i: usize) -> i64 {
        self.u_positions(cd, i).iter().map(|&k| self.u(cd, i, k)).sum()
    }

    /// True when every charge at node `i` is nonnegative.
    fn is_dominant(&self, cd: &CartanData, i: usize) -> bool {
        self.u_positions(cd, i).iter().all(|&k| self.u(cd, i, k) >= 0)
    }

    /// Dominant at every node.
    fn is_dominant_all(&self, cd: &CartanData) -> bool {
        cd.nodes().all(|i| self.is_dominant(cd, i))
    }
}

/// Monomial in the commuting variables `W[i,k]`, `V[i,k]` with exponents >= 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatMonomial {
    v: BTreeMap<SpectralIndex, i64>,
    w: BTreeMap<SpectralIndex, i64>,
}

impl HatMonomial {
    /// The generator `W[i,k]`.
    pub fn w_gen(i: usize, k: i64) -> Self {
        HatMonomial::unit().mul_w(i, k, 1)
    }

    /// The generator `V[i,k]`.
    pub fn v_gen(i: usize, k: i64) -> Self {
        HatMonomial::unit().mul_v(i, k, 1)
    }

    /// Multiplies by `W[i,k]^e`; `e` may be negative as long as the result
    /// keeps every exponent nonnegative (checked).
    pub fn mul_w(mut self, i: usize, k: i64, e: i64) -> Self {
        bump_nonneg(&mut self.w, si(i, k), e, "W");
        self
    }

    /// Multiplies by `V[i,k]^e`, with the same nonnegativity check.
    pub fn mul_v(mut self, i: usize, k: i64, e: i64) -> Self {
        bump_nonneg(&mut self.v, si(i, k), e, "V");
        self
    }

    pub fn v_exp(&self, i: usize, k: i64) -> i64 {
        self.v.get(&si(i, k)).copied().unwrap_or(0)
    }

    pub fn w_exp(&self, i: usize, k: i64) -> i64 {
        self.w.get(&si(i, k)).copied().unwrap_or(0)
    }

    pub fn v_iter(&self) -> impl Iterator<Item = (SpectralIndex, i64)> + '_ {
        self.v.iter().map(|(&s, &e)| (s, e))
    }

    pub fn w_iter(&self) -> impl Iterator<Item = (SpectralIndex, i64)> + '_ {
        self.w.iter().map(|(&s, &e)| (s, e))
    }

    /// Divides by one factor `V[i,k]`, or `None` when it does not occur.
    pub fn strip_v(&self, i: usize, k: i64) -> Option<Self> {
        if self.v_exp(i, k) < 1 {
            return None;
        }
        Some(self.clone().mul_v(i, k, -1))
    }

    /// Total degree in the `V`-variables at node `i`.
    pub fn v_degree(&self, i: usize) -> i64 {
        self.v.iter().filter(|(s, _)| s.node == i).map(|(_, &e)| e).sum()
    }

    pub fn pow(&self, e: i64) -> Self {
        assert!(e >= 0, "hat monomials only admit nonnegative powers");
        let scale = |m: &BTreeMap<SpectralIndex, i64>| {
            m.iter().map(|(&s, &x)| (s, x * e)).collect::<BTreeMap<_, _>>()
        };
        if e == 0 {
            return HatMonomial::unit();
        }
        HatMonomial { v: scale(&self.v), w: scale(&self.w) }
    }

    /// Smallest and largest lattice position in the support.
    pub fn k_range(&self) -> Option<(i64, i64)> {
        k_range(self.v.keys().chain(self.w.keys()))
    }
}

impl Monomial for HatMonomial {
    fn unit() -> Self {
        HatMonomial::default()
    }

    fn is_unit(&self) -> bool {
        self.v.is_empty() && self.w.is_empty()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, e) in other.v_iter() {
            bump_nonneg(&mut out.v, s, e, "V");
        }
        for (s, e) in other.w_iter() {
            bump_nonneg(&mut out.w, s, e, "W");
        }
        out
    }

    /// `u_{i,k} = w_{i,k} - v_{i,k-r_i} - v_{i,k+r_i} + (neighbour terms)`,
    /// where node `j` contributes `v_{j,k}` when `C[i][j] = -1`, the pair
    /// `v_{j,k-1} + v_{j,k+1}` when `C[i][j] = -2`, and
    /// `v_{j,k-2} + v_{j,k} + v_{j,k+2}` when `C[i][j] = -3`.
    fn u(&self, cd: &CartanData, i: usize, k: i64) -> i64 {
        let ri = cd.r(i);
        let mut u = self.w_exp(i, k) - self.v_exp(i, k - ri) - self.v_exp(i, k + ri);
        for j in cd.nodes() {
            if j == i {
                continue;
            }
            u += match cd.c(i, j) {
                0 => 0,
                -1 => self.v_exp(j, k),
                -2 => self.v_exp(j, k - 1) + self.v_exp(j, k + 1),
                -3 => self.v_exp(j, k - 2) + self.v_exp(j, k) + self.v_exp(j, k + 2),
                _ => unreachable!("validated Cartan entries lie in {{0,-1,-2,-3}}"),
            };
        }
        u
    }

    fn u_positions(&self, cd: &CartanData, i: usize) -> BTreeSet<i64> {
        let ri = cd.r(i);
        let mut ks = BTreeSet::new();
        for (s, _) in self.w_iter() {
            if s.node == i {
                ks.insert(s.k);
            }
        }
        for (s, _) in self.v_iter() {
            if s.node == i {
                ks.insert(s.k - ri);
                ks.insert(s.k + ri);
            } else {
                match cd.c(i, s.node) {
                    0 => {}
                    -1 => {
                        ks.insert(s.k);
                    }
                    -2 => {
                        ks.insert(s.k - 1);
                        ks.insert(s.k + 1);
                    }
                    -3 => {
                        ks.insert(s.k - 2);
                        ks.insert(s.k);
                        ks.insert(s.k + 2);
                    }
                    _ => unreachable!("validated Cartan entries lie in {{0,-1,-2,-3}}"),
                }
            }
        }
        ks
    }
}

impl fmt::Display for HatMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in self.w_iter() {
            write_var(f, &mut first, 'W', s, e)?;
        }
        for (s, e) in self.v_iter() {
            write_var(f, &mut first, 'V', s, e)?;
        }
        Ok(())
    }
}

/// Laurent monomial in the variables `Y[i,k]` (any nonzero integer exponents).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial {
    y: BTreeMap<SpectralIndex, i64>,
}

impl YMonomial {
    /// The generator `Y[i,k]`.
    pub fn y_gen(i: usize, k: i64) -> Self {
        YMonomial::unit().mul_y(i, k, 1)
    }

    /// Multiplies by `Y[i,k]^e`.
    pub fn mul_y(mut self, i: usize, k: i64, e: i64) -> Self {
        if e != 0 {
            let slot = self.y.entry(si(i, k)).or_insert(0);
            *slot += e;
            if *slot == 0 {
                self.y.remove(&si(i, k));
            }
        }
        self
    }

    pub fn exp(&self, i: usize, k: i64) -> i64 {
        self.y.get(&si(i, k)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SpectralIndex, i64)> + '_ {
        self.y.iter().map(|(&s, &e)| (s, e))
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return YMonomial::unit();
        }
        YMonomial {
            y: self.y.iter().map(|(&s, &x)| (s, x * e)).collect(),
        }
    }

    /// Quotient `self / other` (always defined, exponents just subtract).
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// Multiplies by `A_{i,q^k}^e` (`e` of either sign).
    pub fn mul_a_pow(&self, cd: &CartanData, i: usize, k: i64, e: i64) -> Self {
        self.mul(&cd.a_inverse_monomial(i, k).pow(-e))
    }

    /// Smallest and largest lattice position in the support.
    pub fn k_range(&self) -> Option<(i64, i64)> {
        k_range(self.y.keys())
    }
}

impl Monomial for YMonomial {
    fn unit() -> Self {
        YMonomial::default()
    }

    fn is_unit(&self) -> bool {
        self.y.is_empty()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, e) in other.iter() {
            out = out.mul_y(s.node, s.k, e);
        }
        out
    }

    fn u(&self, _cd: &CartanData, i: usize, k: i64) -> i64 {
        self.exp(i, k)
    }

    fn u_positions(&self, _cd: &CartanData, i: usize) -> BTreeSet<i64> {
        self.y
            .keys()
            .filter(|s| s.node == i)
            .map(|s| s.k)
            .collect()
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in self.iter() {
            write_var(f, &mut first, 'Y', s, e)?;
        }
        Ok(())
    }
}

fn bump_nonneg(map: &mut BTreeMap<SpectralIndex, i64>, s: SpectralIndex, e: i64, var: &str) {
    if e == 0 {
        return;
    }
    let slot = map.entry(s).or_insert(0);
    *slot += e;
    assert!(
        *slot >= 0,
        "exponent of {var}[{},{}] would become negative",
        s.node,
        s.k
    );
    if *slot == 0 {
        map.remove(&s);
    }
}

fn k_range<'a, I: Iterator<Item = &'a SpectralIndex>>(keys: I) -> Option<(i64, i64)> {
    let mut out: Option<(i64, i64)> = None;
    for s in keys {
        out = Some(match out {
            None => (s.k, s.k),
            Some((lo, hi)) => (lo.min(s.k), hi.max(s.k)),
        });
    }
    out
}

fn write_var(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    name: char,
    s: SpectralIndex,
    e: i64,
) -> fmt::Result {
    if !*first {
        write!(f, " ")?;
    }
    *first = false;
    write!(f, "{name}[{},{}]", s.node, s.k)?;
    if e != 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}
