//! Compile-and-run pin for the library example shown in README.md.

use tscreen_core::cartan::CartanData;
use tscreen_core::kernels::{decompose_hat, e_hat};
use tscreen_core::parse::parse_hat;
use tscreen_core::rings::HatMonomial;
use tscreen_core::screening::{nf_hat_f, screen_l};

#[test]
fn snippet() {
    let cd = CartanData::named("A2").unwrap();
    let w = HatMonomial::w_gen(1, 0);
    let e = e_hat(&cd, 1, &w).unwrap();
    assert!(nf_hat_f(&cd, &screen_l(&cd, 1, &e)).is_zero());
    let dec = decompose_hat(&cd, 1, &e).unwrap();
    assert!(dec.remainder.is_zero());
    assert_eq!(e, parse_hat(&cd, "W[1,0] + W[1,0] V[1,1]").unwrap());
}
