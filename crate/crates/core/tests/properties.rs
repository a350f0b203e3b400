//! Property tests for the algebra kernels.

use nearfree::field::{FieldCtx, GF, QQ, prime_table, rat};
use nearfree::groebner::{IdealPoly, TermOrder, buchberger, is_groebner, normal_form};
use nearfree::matrix::{ExactMatrix, invert3, mat3_mul};
use nearfree::poly::{HomPoly, monomial_basis, parse_poly};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c).prop_map(move |data| (c, data))
        })
}

fn hom_poly() -> impl Strategy<Value = HomPoly> {
    (1usize..=5usize)
        .prop_flat_map(|d| {
            let basis = monomial_basis(d);
            let n = basis.len();
            proptest::collection::vec((0..n, -9i64..=9), 1..=6).prop_map(move |picks| {
                let mut f = HomPoly::zero(d);
                for (i, c) in picks {
                    f = f.add(&HomPoly::monomial(basis[i], rat(c)));
                }
                f
            })
        })
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn small_mat3() -> impl Strategy<Value = [[i64; 3]; 3]> {
    proptest::array::uniform3(proptest::array::uniform3(-3i64..=3))
}

fn to_rat3(m: [[i64; 3]; 3]) -> [[nearfree::Rat; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| rat(m[i][j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_kernel_is_columns((cols, data) in small_matrix()) {
        let rows = data.len() / cols;
        let entries: Vec<Vec<_>> = (0..rows)
            .map(|r| data[r * cols..(r + 1) * cols].iter().map(|&v| rat(v)).collect())
            .collect();
        let m = ExactMatrix::from_rows(QQ, entries, cols);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|e| e == &rat(0)));
        }
    }

    #[test]
    fn modular_rank_agrees_with_rational((cols, data) in small_matrix()) {
        let rows = data.len() / cols;
        let qq_rows: Vec<Vec<_>> = (0..rows)
            .map(|r| data[r * cols..(r + 1) * cols].iter().map(|&v| rat(v)).collect())
            .collect();
        let gf = GF::new(prime_table()[0]);
        let gf_rows: Vec<Vec<u64>> = qq_rows
            .iter()
            .map(|row| row.iter().map(|q| gf.from_rat(q).unwrap()).collect())
            .collect();
        let a = ExactMatrix::from_rows(QQ, qq_rows, cols);
        let b = ExactMatrix::from_rows(gf, gf_rows, cols);
        // entries are tiny, so the prime cannot be unlucky for the entries
        // themselves; minors still could vanish mod p only if they vanish in Z
        // times p, impossible at this size
        prop_assert_eq!(a.rank(), b.rank());
    }

    #[test]
    fn parse_display_roundtrip(f in hom_poly()) {
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), f);
    }

    #[test]
    fn euler_identity_always_holds(f in hom_poly()) {
        prop_assert!(f.euler_check());
    }

    #[test]
    fn linear_change_composes(f in hom_poly(), m in small_mat3(), n in small_mat3()) {
        let (m, n) = (to_rat3(m), to_rat3(n));
        prop_assume!(nearfree::matrix::det3(&m) != rat(0));
        prop_assume!(nearfree::matrix::det3(&n) != rat(0));
        let two_steps = f.linear_change(&m).unwrap().linear_change(&n).unwrap();
        let one_step = f.linear_change(&mat3_mul(&n, &m)).unwrap();
        prop_assert_eq!(two_steps, one_step);
    }

    #[test]
    fn cone_detection_is_change_invariant(f in hom_poly(), m in small_mat3()) {
        let m = to_rat3(m);
        prop_assume!(nearfree::matrix::det3(&m) != rat(0));
        prop_assert_eq!(f.linear_change(&m).unwrap().is_cone(), f.is_cone());
    }

    #[test]
    fn inverse_change_restores(f in hom_poly(), m in small_mat3()) {
        let m = to_rat3(m);
        prop_assume!(nearfree::matrix::det3(&m) != rat(0));
        let inv = invert3(&m).unwrap();
        prop_assert_eq!(f.linear_change(&m).unwrap().linear_change(&inv).unwrap(), f);
    }

    #[test]
    fn groebner_membership_and_idempotence(
        f in hom_poly(),
        g in hom_poly(),
        u in 0usize..100,
        v in 0usize..100,
        p in hom_poly(),
    ) {
        let order = TermOrder::default();
        let gens = vec![IdealPoly::from_hompoly(&order, &f), IdealPoly::from_hompoly(&order, &g)];
        let gb = buchberger(&gens, &order, 3).unwrap();
        prop_assert!(is_groebner(&gb));
        // a combination m1*f + m2*g of matching degree must reduce to zero
        let b1 = monomial_basis(g.degree() + 1);
        let b2 = monomial_basis(f.degree() + 1);
        let m1 = b1[u % b1.len()];
        let m2 = b2[v % b2.len()];
        let comb = f.mul_monomial(&m1, &rat(3)).add(&g.mul_monomial(&m2, &rat(-2)));
        if !comb.is_zero() {
            let nf = normal_form(&IdealPoly::from_hompoly(&order, &comb), &gb);
            prop_assert!(nf.is_zero());
        }
        // the normal form is a fixed point of reduction
        let once = normal_form(&IdealPoly::from_hompoly(&order, &p), &gb);
        let twice = normal_form(&once, &gb);
        prop_assert_eq!(once, twice);
    }
}
