//! The three Laurent rings and the maps between them.

pub mod bichar;
pub mod element;
pub mod maps;
pub mod monomial;
pub mod order;

pub use bichar::{d_eval, d_eval_alt, star_mul, Bichar, BicharError};
pub use element::Element;
pub use maps::{bar_hat, bar_y, hat_pi_d, pi_node, pi_t, pi_tilde, y_image};
pub use monomial::{si, HatMonomial, Monomial, SpectralIndex, YMonomial};
pub use order::{order_le, OrderError, OrderRel, Window};

use crate::tpoly::TPoly;

/// Element of the deformed hat ring (W/V variables over Laurent `t`-polynomials).
pub type HatElement = Element<HatMonomial, TPoly>;
/// Element of the deformed `Y`-ring.
pub type YElement = Element<YMonomial, TPoly>;
/// Element of the classical `Y`-ring (`t = 1`).
pub type YClassicalElement = Element<YMonomial, i64>;
