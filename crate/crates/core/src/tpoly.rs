//! Laurent polynomials in the deformation parameter `t` with integer coefficients.
//!
//! [`TPoly`] is the coefficient ring for the deformed algebras in this crate. It
//! is kept sparse (exponent to coefficient map, zero coefficients never stored)
//! so that equality is structural and the representation is canonical.
//!
//! Besides ring arithmetic the module provides the two combinatorial families
//! used throughout: the symmetrized integers `[u]_t` and the Gaussian binomial
//! coefficients, plus the bar involution `t -> t^{-1}` and exact division by
//! `(t - 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("polynomial {0} is not divisible by (t - 1)")]
pub struct NotDivisible(pub String);

/// Sparse Laurent polynomial in `t` over the integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl TPoly {
    pub fn new() -> Self {
        TPoly::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(0, c);
        }
        TPoly { coeffs }
    }

    /// The monomial `t^k`.
    pub fn t_power(k: i64) -> Self {
        TPoly::term(k, 1)
    }

    /// The monomial `c * t^k`.
    pub fn term(k: i64, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(k, c);
        }
        TPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = TPoly::new();
        for (k, c) in pairs {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `c * t^k` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&k);
        }
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Substitutes `t = 1`, i.e. sums the coefficients.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Bar involution `t -> t^{-1}`.
    pub fn bar(&self) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Symmetrized `t`-integer:
    /// `[u] = 1 + t^2 + ... + t^{2(u-1)}` for `u >= 0` and
    /// `[u] = -(t^{-2} + ... + t^{2u})` for `u < 0`, so that
    /// `[u + u'] = [u] t^{2u'} + [u']` holds for all integers.
    pub fn t_integer(u: i64) -> Self {
        let mut p = TPoly::new();
        if u >= 0 {
            for k in 0..u {
                p.add_term(2 * k, 1);
            }
        } else {
            for k in 1..=(-u) {
                p.add_term(-2 * k, -1);
            }
        }
        p
    }

    /// Gaussian binomial coefficient `[n over r]` in the symmetric normalization
    /// (invariant under `t -> t^{-1}`), e.g. `[2 over 1] = t^{-1} + t`.
    ///
    /// Returns zero when `r` lies outside `0..=n` or `n < 0`.
    pub fn gauss_binom(n: i64, r: i64) -> Self {
        if n < 0 || r < 0 || r > n {
            return TPoly::new();
        }
        // Row recursion [p+1, r] = t^{-r} [p, r] + t^{p+1-r} [p, r-1].
        let mut row: Vec<TPoly> = vec![TPoly::one()];
        for p in 0..n {
            let mut next: Vec<TPoly> = Vec::with_capacity(row.len() + 1);
            for s in 0..=(p + 1) {
                let from_same = if s <= p { row[s as usize].shift(-s) } else { TPoly::new() };
                let from_prev = if s >= 1 { row[(s - 1) as usize].shift(p + 1 - s) } else { TPoly::new() };
                next.push(&from_same + &from_prev);
            }
            row = next;
        }
        row[r as usize].clone()
    }

    /// Exact division by `(t - 1)`; fails unless the polynomial vanishes at `t = 1`.
    pub fn divide_by_t_minus_1(&self) -> Result<TPoly, NotDivisible> {
        if self.is_zero() {
            return Ok(TPoly::new());
        }
        if self.eval_one() != 0 {
            return Err(NotDivisible(self.to_string()));
        }
        // Shift so the lowest exponent is 0, synthetic-divide, shift back.
        let e = self.min_exp().expect("nonzero polynomial has a minimum exponent");
        let d = self.max_exp().expect("nonzero polynomial has a maximum exponent") - e;
        let a = |j: i64| self.coeff(j + e);
        let mut q = TPoly::new();
        let mut carry = 0i64; // coefficient b_j of the quotient, from the top down
        for j in (1..=d).rev() {
            carry += a(j);
            q.add_term(j - 1 + e, carry);
        }
        debug_assert_eq!(carry + a(0), 0, "remainder must vanish when t = 1 is a root");
        Ok(q)
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly::new()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        TPoly::constant(1)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (k, c) in rhs.iter() {
            self.add_term(k, c);
        }
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        for (k, c) in rhs.iter() {
            self.add_term(k, -c);
        }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::new();
        for (k1, c1) in self.iter() {
            for (k2, c2) in rhs.iter() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for TPoly {
    /// Renders in a form the expression parser accepts back, e.g. `1+t^2` or
    /// `-t^-2+2t^4`. Terms are listed by increasing exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            let sign_prefix = if first {
                if c < 0 { "-" } else { "" }
            } else if c < 0 {
                "-"
            } else {
                "+"
            };
            let a = c.abs();
            write!(f, "{sign_prefix}")?;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
