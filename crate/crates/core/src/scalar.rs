//! Coefficient-ring abstraction shared by the deformed and classical algebras.
//!
//! Every ring element, screening operator and kernel routine in this crate is
//! generic over a [`Scalar`]. Two instantiations are provided:
//!
//! * [`TPoly`], Laurent polynomials in `t`, for the deformed rings;
//! * `i64`, for the classical (`t = 1`) ring, where `t`-powers collapse to 1,
//!   `t`-integers collapse to ordinary integers and Gaussian binomials to
//!   binomial coefficients.
//!
//! This is what makes the classical screening and kernel algorithms literally
//! the same code as the deformed ones, evaluated in a smaller ring.

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Neg, Sub};

use crate::tpoly::TPoly;

pub trait Scalar:
    Clone + Eq + Ord + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Image of `t^k` in this ring.
    fn t_power(k: i64) -> Self;

    /// Image of the symmetrized `t`-integer `[u]`.
    fn t_integer(u: i64) -> Self;

    /// Image of the symmetric Gaussian binomial `[n over r]`.
    fn gauss_binom(n: i64, r: i64) -> Self;

    /// Bar involution `t -> t^{-1}` (identity on the classical ring).
    fn bar(&self) -> Self;

    /// Evaluation at `t = 1`.
    fn eval_one(&self) -> i64;

    /// Multiplicative inverse when the value is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn is_minus_one(&self) -> bool {
        *self == Self::one().neg()
    }

    /// Plain rendering, e.g. `1+t^2` or `-3`.
    fn render(&self) -> String;

    /// Rendering safe to prefix to a monomial inside a sum: multi-term or
    /// negative values are parenthesized, e.g. `(1+t^2)` or `(-3)`, while `t^2`
    /// and `3` stay bare.
    fn render_coeff(&self) -> String {
        let plain = self.render();
        // Parenthesize sums and leading signs; a '-' right after '^' is an
        // exponent sign, not a term boundary.
        let bytes = plain.as_bytes();
        let needs_parens = bytes
            .iter()
            .enumerate()
            .any(|(i, &b)| b == b'+' || (b == b'-' && (i == 0 || bytes[i - 1] != b'^')));
        if needs_parens {
            format!("({plain})")
        } else {
            plain
        }
    }
}

impl Scalar for TPoly {
    fn from_int(n: i64) -> Self {
        TPoly::constant(n)
    }

    fn t_power(k: i64) -> Self {
        TPoly::t_power(k)
    }

    fn t_integer(u: i64) -> Self {
        TPoly::t_integer(u)
    }

    fn gauss_binom(n: i64, r: i64) -> Self {
        TPoly::gauss_binom(n, r)
    }

    fn bar(&self) -> Self {
        TPoly::bar(self)
    }

    fn eval_one(&self) -> i64 {
        TPoly::eval_one(self)
    }

    fn inverse(&self) -> Option<Self> {
        let mut terms = self.iter();
        let (k, c) = terms.next()?;
        if terms.next().is_some() || c.abs() != 1 {
            return None;
        }
        Some(TPoly::term(-k, c))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for i64 {
    fn from_int(n: i64) -> Self {
        n
    }

    fn t_power(_k: i64) -> Self {
        1
    }

    fn t_integer(u: i64) -> Self {
        u
    }

    fn gauss_binom(n: i64, r: i64) -> Self {
        binom(n, r)
    }

    fn bar(&self) -> Self {
        *self
    }

    fn eval_one(&self) -> i64 {
        *self
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs() == 1).then_some(*self)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// Ordinary binomial coefficient; zero outside `0 <= r <= n`.
pub fn binom(n: i64, r: i64) -> i64 {
    if n < 0 || r < 0 || r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut b: i64 = 1;
    for j in 0..r {
        b = b * (n - j) / (j + 1);
    }
    b
}
