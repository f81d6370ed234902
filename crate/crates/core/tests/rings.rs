use tscreen_core::rings::{
    bar_hat, bar_y, d_eval, d_eval_alt, hat_pi_d, order_le, pi_node, pi_t, pi_tilde, star_mul,
    y_image, Bichar, OrderRel, Window,
};
use tscreen_core::{
    CartanData, HatElement, HatMonomial, Monomial, YClassicalElement, YElement, YMonomial, TPoly,
};

fn tp(pairs: &[(i64, i64)]) -> TPoly {
    TPoly::from_pairs(pairs.iter().copied())
}

#[test]
fn u_formula_pins() {
    let sl2 = CartanData::named("sl2").unwrap();
    let v = HatMonomial::v_gen(1, 1);
    assert_eq!(v.u(&sl2, 1, 0), -1);
    assert_eq!(v.u(&sl2, 1, 2), -1);
    assert_eq!(v.u(&sl2, 1, 1), 0);

    // The two charge values printed for the B2 example.
    let b2 = CartanData::named("B2").unwrap();
    let v2 = HatMonomial::v_gen(2, 0);
    assert_eq!(v2.u(&b2, 1, -2), 0);
    let v1 = HatMonomial::v_gen(1, 0);
    assert_eq!(v1.u(&b2, 2, 1), 1);
    assert_eq!(v1.u(&b2, 2, -1), 1);
    assert_eq!(v1.u(&b2, 1, 2), -1);
    assert_eq!(v1.u(&b2, 1, -2), -1);
    // And hence V[i,k] has the charge profile of A[i,k]^{-1}.
    for cd in [&sl2, &b2] {
        for i in cd.nodes() {
            let v = HatMonomial::v_gen(i, 0);
            let a = cd.a_inverse_monomial(i, 0);
            for j in cd.nodes() {
                for k in -5..=5 {
                    assert_eq!(v.u(cd, j, k), a.exp(j, k), "node {j}, k {k}");
                }
            }
        }
    }
}

#[test]
fn u_additivity_and_weight() {
    let a2 = CartanData::named("A2").unwrap();
    let m1 = HatMonomial::w_gen(1, 0).mul_v(2, 1, 2);
    let m2 = HatMonomial::v_gen(1, -1).mul_w(2, 0, 3);
    let prod = m1.mul(&m2);
    for i in 1..=2 {
        for k in -4..=4 {
            assert_eq!(prod.u(&a2, i, k), m1.u(&a2, i, k) + m2.u(&a2, i, k));
        }
        assert_eq!(prod.wt(&a2, i), m1.wt(&a2, i) + m2.wt(&a2, i));
    }

    let sl2 = CartanData::named("sl2").unwrap();
    let m = HatMonomial::w_gen(1, 0).mul_w(1, 2, 1);
    assert_eq!(m.wt(&sl2, 1), 2);
    assert_eq!(HatMonomial::v_gen(1, 1).wt(&sl2, 1), -2);

    // Disconnected nodes do not interact.
    let two_sl2 = CartanData::new(vec![vec![2, 0], vec![0, 2]], vec![1, 1]).unwrap();
    assert_eq!(HatMonomial::w_gen(2, 0).wt(&two_sl2, 1), 0);
    assert_eq!(HatMonomial::v_gen(2, 0).wt(&two_sl2, 1), 0);
}

#[test]
fn bicharacter_pins() {
    let sl2 = CartanData::named("sl2").unwrap();
    let a2 = CartanData::named("A2").unwrap();
    let v = HatMonomial::v_gen(1, 1);
    let w = HatMonomial::w_gen(1, 0);

    assert_eq!(d_eval(&sl2, Bichar::Zero, &v, &w).unwrap(), 0);
    assert_eq!(d_eval(&sl2, Bichar::Node(1), &v, &w).unwrap(), 1);
    assert_eq!(d_eval(&a2, Bichar::Nakajima, &v, &w).unwrap(), 1);
    assert_eq!(d_eval_alt(&a2, Bichar::Nakajima, &v, &w).unwrap(), 1);
    // The Nakajima pairing needs a symmetric matrix.
    let b2 = CartanData::named("B2").unwrap();
    assert!(d_eval(&b2, Bichar::Nakajima, &v, &w).is_err());

    // Twisted products of the same pair, in both orders.
    let ve = HatElement::from_monomial(v.clone());
    let we = HatElement::from_monomial(w.clone());
    let vw = star_mul(&a2, Bichar::Nakajima, &ve, &we).unwrap();
    assert_eq!(vw, HatElement::term(v.mul(&w), TPoly::t_power(2)));
    let wv = star_mul(&a2, Bichar::Nakajima, &we, &ve).unwrap();
    assert_eq!(wv, HatElement::from_monomial(v.mul(&w)));
}

#[test]
fn projection_pins() {
    let a2 = CartanData::named("A2").unwrap();
    // W goes to Y.
    let x = HatElement::from_monomial(HatMonomial::w_gen(1, 0));
    assert_eq!(pi_tilde(&a2, &x), YClassicalElement::from_monomial(YMonomial::y_gen(1, 0)));
    // V goes to the A-inverse profile.
    let x = HatElement::from_monomial(HatMonomial::v_gen(1, 0));
    let want = YMonomial::y_gen(1, -1).inverse().mul_y(1, 1, -1).mul_y(2, 0, 1);
    assert_eq!(y_image(&a2, &HatMonomial::v_gen(1, 0)), want);
    assert_eq!(pi_tilde(&a2, &x).monomials().collect::<Vec<_>>(), vec![&want]);
    // Coefficients evaluate at t = 1.
    let x = HatElement::term(HatMonomial::w_gen(1, 0), tp(&[(0, 1), (2, 1)]));
    let img = pi_tilde(&a2, &x);
    assert_eq!(img.coeff(&YMonomial::y_gen(1, 0)), 2);

    // The coefficient-preserving projection, plain and twisted.
    let x = HatElement::from_monomial(HatMonomial::w_gen(1, 0).mul_w(1, 0, 1));
    let img = hat_pi_d(&a2, Bichar::Zero, &x).unwrap();
    assert_eq!(img, YElement::from_monomial(YMonomial::y_gen(1, 0).mul_y(1, 0, 1)));
    let x = HatElement::from_monomial(HatMonomial::v_gen(1, 1));
    let img = hat_pi_d(&a2, Bichar::Nakajima, &x).unwrap();
    let a_inv = y_image(&a2, &HatMonomial::v_gen(1, 1));
    assert_eq!(img, YElement::term(a_inv, TPoly::t_power(1)));
    let x = HatElement::term(HatMonomial::w_gen(1, 0), TPoly::t_power(1));
    let img = hat_pi_d(&a2, Bichar::Zero, &x).unwrap();
    assert_eq!(img, YElement::term(YMonomial::y_gen(1, 0), TPoly::t_power(1)));

    // Evaluation at t = 1 on the deformed Y-ring.
    let y = YElement::term(YMonomial::y_gen(1, 0), TPoly::t_power(2));
    assert_eq!(pi_t(&y).coeff(&YMonomial::y_gen(1, 0)), 1);
    let y = YElement::term(YMonomial::y_gen(1, 0), tp(&[(1, 1), (0, -1)]));
    assert!(pi_t(&y).is_zero());

    // The classical evaluation factors through the coefficient-preserving one.
    let x = HatElement::term(HatMonomial::w_gen(2, 1).mul_v(1, 0, 1), tp(&[(-1, 2), (3, 1)]));
    for b in [Bichar::Zero, Bichar::Nakajima] {
        let through = pi_t(&hat_pi_d(&a2, b, &x).unwrap());
        assert_eq!(through, pi_tilde(&a2, &x));
    }
}

#[test]
fn node_projection_pins() {
    let a2 = CartanData::named("A2").unwrap();
    let x = HatElement::from_monomial(HatMonomial::w_gen(2, 0));
    assert_eq!(pi_node(&a2, 1, &x), HatElement::one());
    let x = HatElement::from_monomial(HatMonomial::v_gen(2, 0));
    assert_eq!(pi_node(&a2, 1, &x), HatElement::from_monomial(HatMonomial::w_gen(1, 0)));

    let b2 = CartanData::named("B2").unwrap();
    let x = HatElement::from_monomial(HatMonomial::v_gen(1, 0));
    let want = HatMonomial::w_gen(2, -1).mul_w(2, 1, 1);
    assert_eq!(pi_node(&b2, 2, &x), HatElement::from_monomial(want));

    let g2 = CartanData::named("G2").unwrap();
    let x = HatElement::from_monomial(HatMonomial::v_gen(1, 0));
    let want = HatMonomial::w_gen(2, -2).mul_w(2, 0, 1).mul_w(2, 2, 1);
    assert_eq!(pi_node(&g2, 2, &x), HatElement::from_monomial(want));

    // Node charges are preserved by the node projection.
    for (cd, i) in [(&a2, 1), (&a2, 2), (&b2, 1), (&b2, 2), (&g2, 2)] {
        let m = HatMonomial::w_gen(1, 0).mul_v(2, 1, 2).mul_v(1, -1, 1).mul_w(2, 2, 1);
        let proj = pi_node(cd, i, &HatElement::from_monomial(m.clone()));
        let pm = proj.monomials().next().unwrap();
        for k in -6..=6 {
            assert_eq!(pm.u(cd, i, k), m.u(cd, i, k), "node {i}, k {k}");
        }
    }
}

#[test]
fn bar_pins() {
    let a2 = CartanData::named("A2").unwrap();
    let x = HatElement::term(HatMonomial::w_gen(1, 0), TPoly::t_power(1));
    let barred = bar_hat(&a2, Bichar::Zero, &x).unwrap();
    assert_eq!(barred, HatElement::term(HatMonomial::w_gen(1, 0), TPoly::t_power(-1)));

    let v = HatElement::from_monomial(HatMonomial::v_gen(1, 1));
    let barred = bar_hat(&a2, Bichar::Nakajima, &v).unwrap();
    assert_eq!(barred, HatElement::term(HatMonomial::v_gen(1, 1), TPoly::t_power(-2)));

    let y = YElement::term(YMonomial::y_gen(1, 0), TPoly::t_power(1));
    assert_eq!(bar_y(&y), YElement::term(YMonomial::y_gen(1, 0), TPoly::t_power(-1)));
    let y = YElement::from_monomial(YMonomial::y_gen(1, 0));
    assert_eq!(bar_y(&y), y);
}

#[test]
fn order_pins() {
    let a2 = CartanData::named("A2").unwrap();
    let w = Window::default();
    let y = YMonomial::y_gen(1, 0);
    assert_eq!(order_le(&a2, &y, &y, w).unwrap(), OrderRel::Equal);

    let lower = y.mul_a_pow(&a2, 1, 1, -1);
    match order_le(&a2, &lower, &y, w).unwrap() {
        OrderRel::Le { cert } => {
            assert_eq!(cert.len(), 1);
            let (idx, e) = cert.iter().next().unwrap();
            assert_eq!((idx.node, idx.k, *e), (1, 1, 1));
        }
        other => panic!("expected a downward relation, got {other:?}"),
    }
    assert!(order_le(&a2, &y, &lower, w).unwrap().is_ge());

    // Monomials whose quotient is not an A-product are incomparable.
    let z = YMonomial::y_gen(2, 0);
    assert_eq!(order_le(&a2, &y, &z, w).unwrap(), OrderRel::Incomparable);

    // Support outside the window is an input error.
    let far = YMonomial::y_gen(1, 40);
    assert!(order_le(&a2, &far, &y, w).is_err());
}

#[test]
fn element_display() {
    let m = HatMonomial::w_gen(1, 0).mul_v(2, 1, 2);
    assert_eq!(m.to_string(), "W[1,0] V[2,1]^2");
    let x = HatElement::term(m, tp(&[(0, 1), (2, 1)]));
    assert_eq!(x.to_string(), "(1+t^2) W[1,0] V[2,1]^2");
    assert_eq!(HatElement::one().to_string(), "1");
    assert_eq!(HatElement::zero().to_string(), "0");
    let y = YElement::term(YMonomial::y_gen(1, 2).inverse(), TPoly::t_power(-1));
    assert_eq!(y.to_string(), "t^-1 Y[1,2]^-1");
}
