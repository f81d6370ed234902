//! Sparse linear combinations of monomials over a [`Scalar`] ring.
//!
//! Terms are kept in a `BTreeMap` keyed by the monomial order, zero
//! coefficients are dropped eagerly, and equality is structural. The product
//! defined here is the plain commutative one; twisted products live with the
//! bicharacters.

use std::collections::BTreeMap;
use std::fmt;

use crate::rings::monomial::Monomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<M: Monomial, C: Scalar> {
    terms: BTreeMap<M, C>,
}

impl<M: Monomial, C: Scalar> Default for Element<M, C> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<M: Monomial, C: Scalar> Element<M, C> {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar `c` as an element (a multiple of the unit monomial).
    pub fn scalar(c: C) -> Self {
        Element::term(M::unit(), c)
    }

    pub fn one() -> Self {
        Element::scalar(C::one())
    }

    pub fn from_monomial(m: M) -> Self {
        Element::term(m, C::one())
    }

    pub fn term(m: M, c: C) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &C)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &M) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// True when the support is contained in the unit monomial.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c.clone());
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

    /// Plain commutative product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Element::zero();
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Element::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut out = Element::zero();
        for (m, c) in self.iter() {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Applies `f` to every term, summing the images (a linear extension).
    pub fn map_terms<N, D, F>(&self, f: F) -> Element<N, D>
    where
        N: Monomial,
        D: Scalar,
        F: Fn(&M, &C) -> Element<N, D>,
    {
        let mut out = Element::zero();
        for (m, c) in self.iter() {
            out = out.add(&f(m, c));
        }
        out
    }
}

impl<M: Monomial, C: Scalar> fmt::Display for Element<M, C> {
    /// Renders as a sum the expression parser accepts back, e.g.
    /// `(t^-1+t) W[1,0] + V[2,1]^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{}", c.render_coeff())?;
            } else if Scalar::is_one(c) {
                write!(f, "{m}")?;
            } else if c.is_minus_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{} {m}", c.render_coeff())?;
            }
        }
        Ok(())
    }
}
