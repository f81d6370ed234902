use tscreen_core::{CartanData, YMonomial};

#[test]
fn named_types() {
    let a2 = CartanData::named("A2").unwrap();
    assert_eq!(a2.n(), 2);
    assert_eq!((a2.c(1, 1), a2.c(1, 2), a2.c(2, 1), a2.c(2, 2)), (2, -1, -1, 2));
    assert_eq!((a2.r(1), a2.r(2)), (1, 1));
    assert!(a2.is_simply_laced());

    let b2 = CartanData::named("B2").unwrap();
    assert_eq!((b2.c(1, 2), b2.c(2, 1)), (-1, -2));
    assert_eq!((b2.r(1), b2.r(2)), (2, 1));
    assert!(!b2.is_simply_laced());

    let g2 = CartanData::named("G2").unwrap();
    assert_eq!((g2.c(1, 2), g2.c(2, 1)), (-1, -3));
    assert_eq!((g2.r(1), g2.r(2)), (3, 1));

    let sl2 = CartanData::named("sl2").unwrap();
    assert_eq!(sl2.n(), 1);
    assert_eq!(sl2.c(1, 1), 2);

    for name in ["A1", "A5", "B3", "C3", "D4", "E6", "E7", "E8", "F4"] {
        let cd = CartanData::named(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        // Symmetrizability of every named table.
        for i in cd.nodes() {
            for j in cd.nodes() {
                assert_eq!(cd.r(i) * cd.c(i, j), cd.r(j) * cd.c(j, i), "{name} at ({i},{j})");
            }
        }
    }
    assert!(CartanData::named("H3").is_err());
}

#[test]
fn validation_rejects_bad_matrices() {
    // Positive off-diagonal entry.
    assert!(CartanData::new(vec![vec![2, 1], vec![1, 2]], vec![1, 1]).is_err());
    // Diagonal must be 2.
    assert!(CartanData::new(vec![vec![1]], vec![1]).is_err());
    // Asymmetric zero pattern.
    assert!(CartanData::new(vec![vec![2, 0], vec![-1, 2]], vec![1, 1]).is_err());
    // Not symmetrizable by the provided r.
    assert!(CartanData::new(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
    // Off-diagonal below -3.
    assert!(CartanData::new(vec![vec![2, -4], vec![-1, 2]], vec![1, 4]).is_err());
    // Valid custom matrix, including a disconnected one.
    assert!(CartanData::new(vec![vec![2, -1], vec![-2, 2]], vec![2, 1]).is_ok());
    assert!(CartanData::new(vec![vec![2, 0], vec![0, 2]], vec![1, 3]).is_ok());
}

fn exps(m: &YMonomial) -> Vec<((usize, i64), i64)> {
    m.iter().map(|(idx, e)| ((idx.node, idx.k), e)).collect()
}

#[test]
fn a_inverse_profiles() {
    let a2 = CartanData::named("A2").unwrap();
    let m = a2.a_inverse_monomial(1, 0);
    assert_eq!(exps(&m), vec![((1, -1), -1), ((1, 1), -1), ((2, 0), 1)]);

    let b2 = CartanData::named("B2").unwrap();
    let m = b2.a_inverse_monomial(1, 0);
    assert_eq!(exps(&m), vec![((1, -2), -1), ((1, 2), -1), ((2, -1), 1), ((2, 1), 1)]);
    let m = b2.a_inverse_monomial(2, 0);
    assert_eq!(exps(&m), vec![((1, 0), 1), ((2, -1), -1), ((2, 1), -1)]);

    let sl2 = CartanData::named("sl2").unwrap();
    let m = sl2.a_inverse_monomial(1, 3);
    assert_eq!(exps(&m), vec![((1, 2), -1), ((1, 4), -1)]);

    let g2 = CartanData::named("G2").unwrap();
    let m = g2.a_inverse_monomial(2, 0);
    assert_eq!(exps(&m), vec![((1, 0), 1), ((2, -1), -1), ((2, 1), -1)]);
    let m = g2.a_inverse_monomial(1, 0);
    assert_eq!(
        exps(&m),
        vec![((1, -3), -1), ((1, 3), -1), ((2, -2), 1), ((2, 0), 1), ((2, 2), 1)]
    );

    // Total degree -2 on the home node, -C[j][i] on each neighbour.
    for cd in [&a2, &b2, &g2] {
        for i in cd.nodes() {
            let m = cd.a_inverse_monomial(i, 1);
            for j in cd.nodes() {
                let deg: i64 = m.iter().filter(|(idx, _)| idx.node == j).map(|(_, e)| e).sum();
                let want = if j == i { -2 } else { -cd.c(j, i) };
                assert_eq!(deg, want, "node {j} degree of A^-1 at node {i}");
            }
        }
    }
}
