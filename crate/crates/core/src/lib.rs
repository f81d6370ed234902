//! Symbolic screening operators on deformed spectral-lattice Laurent rings.
//!
//! The library works over three rings attached to a Cartan datum:
//!
//! * the hat ring, polynomials in variables `W[i,k]`, `V[i,k]` over Laurent
//!   polynomials in `t`, optionally equipped with a twisted product
//!   `m1 * m2 = t^{2 d(m1,m2)} m1 m2` for a bicharacter `d`;
//! * the deformed `Y`-ring, Laurent monomials in `Y[i,k]` over the same
//!   coefficients;
//! * the classical `Y`-ring, the same monomials with integer coefficients.
//!
//! On each ring a screening map at node `i` sends an element into the free
//! left module with basis symbols `S_{i,q^k}`, and a family of two-term
//! relations identifies symbols whose positions differ by `2 r_i`. The crate
//! provides the rings and maps ([`rings`]), the screening maps with their
//! quotient normal forms ([`screening`]), canonical kernel elements with
//! decomposition and membership procedures ([`kernels`]), parsing and JSON
//! encodings for the command-line tool ([`parse`], [`json`]), seeded random
//! generation ([`sampling`]) and the randomized verification suites
//! ([`suites`]).
//!
//! Everything is generic over the coefficient [`Scalar`], and the classical
//! ring is the `i64` instantiation of the same code paths, with `t`-powers
//! collapsing to 1.

pub mod cartan;
pub mod json;
pub mod kernels;
pub mod parse;
pub mod rings;
pub mod sampling;
pub mod scalar;
pub mod screening;
pub mod suites;
pub mod tpoly;

pub use cartan::{CartanData, CartanError};
pub use rings::{
    Element, HatElement, HatMonomial, Monomial, SpectralIndex, Window, YClassicalElement,
    YElement, YMonomial,
};
pub use scalar::Scalar;
pub use screening::{ClassicalScreener, HatScreener, Screener, YScreener};
pub use tpoly::TPoly;
