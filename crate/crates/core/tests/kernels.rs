use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tscreen_core::kernels::{
    decompose_hat, decompose_y, e_hat, e_y, in_kernel_intersection, symmetrization_exponent,
    verify_product_form, EKind, KernelError, ProductFormOutcome,
};
use tscreen_core::rings::maps::{hat_pi_d, y_image};
use tscreen_core::rings::{Bichar, Window};
use tscreen_core::sampling::random_kernel_intersection_member;
use tscreen_core::{CartanData, HatElement, HatMonomial, Monomial, YElement, YMonomial, TPoly};

fn tp(pairs: &[(i64, i64)]) -> TPoly {
    TPoly::from_pairs(pairs.iter().copied())
}

#[test]
fn e_hat_pins() {
    let sl2 = CartanData::named("sl2").unwrap();
    let w = HatMonomial::w_gen(1, 0);

    let e = e_hat(&sl2, 1, &w).unwrap();
    let mut want = HatElement::from_monomial(w.clone());
    want.add_term(w.clone().mul_v(1, 1, 1), TPoly::constant(1));
    assert_eq!(e, want);

    let w2 = w.pow(2);
    let e = e_hat(&sl2, 1, &w2).unwrap();
    let mut want = HatElement::from_monomial(w2.clone());
    want.add_term(w2.clone().mul_v(1, 1, 1), tp(&[(0, 1), (2, 1)]));
    want.add_term(w2.clone().mul_v(1, 1, 2), TPoly::constant(1));
    assert_eq!(e, want);

    let e = e_hat(&sl2, 1, &HatMonomial::unit()).unwrap();
    assert_eq!(e, HatElement::one());

    // Negative charge at the node rejects the monomial.
    let v = HatMonomial::v_gen(1, 1);
    assert!(matches!(
        e_hat(&sl2, 1, &v),
        Err(KernelError::NotDominant { node: 1, .. })
    ));
}

#[test]
fn e_y_pins() {
    let sl2 = CartanData::named("sl2").unwrap();
    let y2 = YMonomial::y_gen(1, 0).pow(2);
    let a1 = y2.mul_a_pow(&sl2, 1, 1, -1);
    let a2 = y2.mul_a_pow(&sl2, 1, 1, -2);

    let e = e_y::<TPoly>(&sl2, 1, &y2, EKind::Plain).unwrap();
    let mut want = YElement::from_monomial(y2.clone());
    want.add_term(a1.clone(), tp(&[(0, 1), (2, 1)]));
    want.add_term(a2.clone(), TPoly::constant(1));
    assert_eq!(e, want);

    // The symmetric variant multiplies each coefficient by t^{-alpha}.
    let e = e_y::<TPoly>(&sl2, 1, &y2, EKind::Prime).unwrap();
    let mut want = YElement::from_monomial(y2.clone());
    want.add_term(a1.clone(), tp(&[(-1, 1), (1, 1)]));
    want.add_term(a2.clone(), TPoly::constant(1));
    assert_eq!(e, want);

    // Integer scalars give the classical expansion.
    let e = e_y::<i64>(&sl2, 1, &y2, EKind::Plain).unwrap();
    assert_eq!(e.coeff(&y2), 2i64.pow(0));
    assert_eq!(e.coeff(&a1), 2);
    assert_eq!(e.coeff(&a2), 1);
    assert_eq!(e.iter().count(), 3);
}

#[test]
fn symmetrization_exponent_pins() {
    let sl2 = CartanData::named("sl2").unwrap();
    let w = Window::new(-6, 6);
    let y2 = YMonomial::y_gen(1, 0).pow(2);

    assert_eq!(symmetrization_exponent(&sl2, 1, &y2, &y2, w).unwrap(), 0);
    let a1 = y2.mul_a_pow(&sl2, 1, 1, -1);
    assert_eq!(symmetrization_exponent(&sl2, 1, &y2, &a1, w).unwrap(), 1);
    let a2 = y2.mul_a_pow(&sl2, 1, 1, -2);
    assert_eq!(symmetrization_exponent(&sl2, 1, &y2, &a2, w).unwrap(), 0);

    // A monomial of different total weight is not reachable.
    let stray = YMonomial::y_gen(1, 0);
    assert!(matches!(
        symmetrization_exponent(&sl2, 1, &y2, &stray, w),
        Err(KernelError::NotBelow { .. })
    ));
}

#[test]
fn decompose_round_trips() {
    let sl2 = CartanData::named("sl2").unwrap();
    let w = HatMonomial::w_gen(1, 0);
    let d = decompose_hat(&sl2, 1, &e_hat(&sl2, 1, &w).unwrap()).unwrap();
    assert!(d.is_complete());
    assert_eq!(d.dominant.len(), 1);
    assert_eq!(d.dominant.get(&w), Some(&TPoly::constant(1)));

    // A pure V-monomial has nothing dominant to peel.
    let v = HatElement::from_monomial(HatMonomial::v_gen(1, 1));
    let d = decompose_hat(&sl2, 1, &v).unwrap();
    assert!(d.dominant.is_empty());
    assert_eq!(d.remainder, v);

    // A named span is recovered coefficient by coefficient.
    let a2cd = CartanData::named("A2").unwrap();
    let picks = [
        (HatMonomial::w_gen(1, 0), tp(&[(0, 1), (2, 1)])),
        (HatMonomial::w_gen(1, 0).mul_w(2, 1, 1), tp(&[(-1, 1)])),
        (HatMonomial::w_gen(1, 2).pow(2), tp(&[(0, -1), (3, 2)])),
    ];
    let mut x = HatElement::zero();
    for (m, c) in &picks {
        x = x.add(&e_hat(&a2cd, 1, m).unwrap().scale(c));
    }
    let d = decompose_hat(&a2cd, 1, &x).unwrap();
    assert!(d.is_complete());
    assert_eq!(d.dominant.len(), picks.len());
    for (m, c) in &picks {
        assert_eq!(d.dominant.get(m), Some(c));
    }

    // Adding anything outside the span leaves a nonzero remainder.
    let noise = HatElement::term(HatMonomial::v_gen(1, 1), tp(&[(0, -1), (1, 1)]));
    let x = e_hat(&sl2, 1, &w).unwrap().add(&noise);
    let d = decompose_hat(&sl2, 1, &x).unwrap();
    assert!(!d.is_complete());
    assert_eq!(d.remainder, noise);

    // Same story in the Y-ring, both kinds.
    let y = YMonomial::y_gen(1, 0).pow(2);
    for kind in [EKind::Plain, EKind::Prime] {
        let x = e_y::<TPoly>(&sl2, 1, &y, kind).unwrap().scale(&tp(&[(1, 3)]));
        let d = decompose_y(&sl2, 1, &x, kind).unwrap();
        assert!(d.is_complete());
        assert_eq!(d.dominant.get(&y), Some(&tp(&[(1, 3)])));
    }
}

#[test]
fn intersection_membership_pins() {
    let window = Window::new(-6, 6);

    let a2cd = CartanData::named("A2").unwrap();
    let m = YMonomial::y_gen(1, 0).mul_y(2, 1, 1);
    let x = e_y::<TPoly>(&a2cd, 1, &m, EKind::Plain).unwrap();
    assert!(in_kernel_intersection(&a2cd, &x, EKind::Plain, window).unwrap());

    let sl2 = CartanData::named("sl2").unwrap();
    let y = YElement::from_monomial(YMonomial::y_gen(1, 0));
    assert!(!in_kernel_intersection(&sl2, &y, EKind::Plain, window).unwrap());

    let scalar = YElement::scalar(tp(&[(2, 5)]));
    assert!(in_kernel_intersection(&sl2, &scalar, EKind::Plain, window).unwrap());

    // Sampled members are always recognized.
    for (name, kind) in [("sl2", EKind::Plain), ("A2", EKind::Plain), ("A2", EKind::Prime), ("B2", EKind::Plain)] {
        let cd = CartanData::named(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for round in 0..10 {
            let x = random_kernel_intersection_member(&cd, kind, window, &mut rng);
            assert!(
                in_kernel_intersection(&cd, &x, kind, window).unwrap(),
                "sampled member rejected: cartan {name}, round {round}, x = {x}"
            );
        }
    }
}

#[test]
fn product_form_matches_direct_formula() {
    let sl2 = CartanData::named("sl2").unwrap();
    for l in 0..=4 {
        let m = HatMonomial::w_gen(1, 0).pow(l);
        match verify_product_form(&sl2, 1, &m).unwrap() {
            ProductFormOutcome::Match { beta } => assert_eq!(beta, 0, "l = {l}"),
            ProductFormOutcome::Mismatch { detail } => panic!("l = {l}: {detail}"),
        }
    }

    // A mixed two-node monomial on A2.
    let a2cd = CartanData::named("A2").unwrap();
    let m = HatMonomial::w_gen(1, 0).mul_w(2, 1, 1);
    assert!(matches!(
        verify_product_form(&a2cd, 1, &m).unwrap(),
        ProductFormOutcome::Match { .. }
    ));

    // Non-simply-laced input is refused.
    let b2 = CartanData::named("B2").unwrap();
    assert!(matches!(
        verify_product_form(&b2, 1, &HatMonomial::w_gen(1, 0)),
        Err(KernelError::RequiresSimplyLaced)
    ));
}

#[test]
fn deformed_and_projected_kernel_elements_agree() {
    // Projecting the deformed kernel element matches the symmetric Y-ring
    // one, up to the self-pairing power of t.
    let a2cd = CartanData::named("A2").unwrap();
    let samples = [
        (1, HatMonomial::w_gen(1, 0)),
        (1, HatMonomial::w_gen(1, 0).mul_w(2, 1, 1)),
        (2, HatMonomial::w_gen(2, -1).pow(2)),
        (1, HatMonomial::w_gen(1, 0).mul_w(1, 2, 1)),
    ];
    for (i, m) in &samples {
        let lhs = e_y::<TPoly>(&a2cd, *i, &y_image(&a2cd, m), EKind::Prime)
            .unwrap()
            .scale(&TPoly::t_power(tscreen_core::rings::d_eval(&a2cd, Bichar::Nakajima, m, m).unwrap()));
        let rhs = hat_pi_d(&a2cd, Bichar::Nakajima, &e_hat(&a2cd, *i, m).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "node {i}, monomial {m}");
    }
}
