//! Screening operators on the three rings and normal forms modulo the
//! quotient relation families.

pub mod nf;
pub mod screener;

pub use nf::{nf_classical, nf_hat_f, nf_y, YNfKind};
pub use screener::{
    bar_screener_hat, bar_screener_y, gen_classical_f, gen_hat_f, gen_y_f, gen_y_fprime,
    left_mul_star, project_screener_hat_d, project_screener_t, project_screener_tilde,
    right_mul_star, screen_l, Screener,
};

use crate::rings::monomial::{HatMonomial, YMonomial};
use crate::tpoly::TPoly;

/// Screening element over the deformed hat ring.
pub type HatScreener = Screener<HatMonomial, TPoly>;
/// Screening element over the deformed `Y`-ring.
pub type YScreener = Screener<YMonomial, TPoly>;
/// Screening element over the classical `Y`-ring.
pub type ClassicalScreener = Screener<YMonomial, i64>;
