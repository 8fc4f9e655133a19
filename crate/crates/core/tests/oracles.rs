#![allow(clippy::needless_range_loop)]

mod common;

use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

use mubar_core::plumbing::{determinant, signature, star_plumbing};
use mubar_core::rational::frac;
use mubar_core::spin::{characteristic_solutions, mubar_all, mubar_graph, rokhlin};
use mubar_core::{IntersectionMatrix, PlumbingGraph, Rational, SeifertInvariants};

#[test]
fn oracle_self_checks() {
    assert_eq!(common::char_poly(&[vec![2, 1], vec![1, 2]]), vec![3, -4, 1]);
    assert_eq!(common::inertia_by_roots(&[vec![0, 1], vec![1, 0]]), (1, 1, 0));
    assert_eq!(common::inertia_by_roots(&[vec![0, 0], vec![0, 0]]), (0, 0, 2));
    assert_eq!(common::inertia_by_roots(&common::e8_matrix()), (0, 8, 0));
    assert_eq!(common::inertia_by_minors(&common::e8_matrix()), Some((0, 8, 0)));
    assert_eq!(common::det_laplace(&common::e8_matrix()), 1);
    assert_eq!(common::h1_from_invariants(-1, &[(2, 1), (3, 1), (7, 1)]), 1);
    assert_eq!(common::h1_from_invariants(-2, &[]), 2);
    assert_eq!(common::characteristic_exhaustive(&[vec![-2]]), vec!["0", "1"]);
    assert_eq!(common::gf2_nullity(&[vec![-2, 1], vec![1, -2]]), 0);
}

fn seifert() -> impl Strategy<Value = SeifertInvariants> {
    let pair = (2i64..=30).prop_flat_map(|a| (Just(a), 1..a)).prop_filter("coprime", |&(a, b)| a.gcd(&b) == 1);
    (prop::collection::vec(pair, 0..=4), -5i64..=2)
        .prop_filter_map("rational homology sphere", |(pairs, b)| {
            SeifertInvariants::normalize(b, &pairs)
                .ok()
                .filter(|s| s.is_rational_homology_sphere())
        })
}

fn symmetric(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
            let mut a = vec![vec![0; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let x = it.next().unwrap();
                    a[i][j] = x;
                    a[j][i] = x;
                }
            }
            a
        })
    })
}

fn single_vertex(w: i64) -> PlumbingGraph {
    let mut g = PlumbingGraph::new();
    g.add_vertex(w);
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn signature_matches_root_count(a in symmetric(7)) {
        let s = signature(&IntersectionMatrix::from_rows(a.clone()).unwrap());
        prop_assert_eq!((s.b_plus, s.b_minus, s.b_zero), common::inertia_by_roots(&a));
    }

    #[test]
    fn determinant_matches_laplace(a in symmetric(7)) {
        let d = determinant(&IntersectionMatrix::from_rows(a.clone()).unwrap());
        prop_assert_eq!(d, common::det_laplace(&a).into());
    }

    #[test]
    fn det_is_h1(si in seifert()) {
        let g = star_plumbing(&si).unwrap();
        let det = determinant(&g.intersection_matrix()).abs();
        prop_assert_eq!(det, common::h1_from_invariants(si.b(), si.pairs()).into());
        prop_assert_eq!(si.h1_order().unwrap(), common::h1_from_invariants(si.b(), si.pairs()));
    }

    #[test]
    fn characteristic_vectors_match_exhaustive(si in seifert()) {
        let g = star_plumbing(&si).unwrap();
        prop_assume!(g.len() <= 14);
        let q = g.intersection_matrix();
        let got: Vec<String> = characteristic_solutions(&q).unwrap().iter().map(|w| w.to_bitstring()).collect();
        prop_assert_eq!(got, common::characteristic_exhaustive(q.rows()));
        prop_assert_eq!(si.spin_structures().unwrap().len(), 1 << common::gf2_nullity(q.rows()));
    }

    #[test]
    fn mubar_antisymmetric(si in seifert()) {
        let mut a: Vec<Rational> = mubar_all(&si).unwrap().into_values().map(|m| -m).collect();
        let mut b: Vec<Rational> = mubar_all(&si.reverse_orientation()).unwrap().into_values().collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mubar_lifts_rokhlin_with_eighths(si in seifert()) {
        for m in mubar_all(&si).unwrap().into_values() {
            prop_assert!((m * 8).is_integer());
            let r = rokhlin(&m);
            prop_assert!(r >= 0.into() && r < 2.into());
        }
    }

    // boundary of the disk bundle of Euler number -p: w = 1 gives (p-1)/8,
    // and for even p also w = 0 gives -1/8
    #[test]
    fn lens_space_closed_form(p in 2i64..200) {
        let mut want = vec![frac((p - 1) as i128, 8)];
        if p % 2 == 0 {
            want.push(frac(-1, 8));
        }
        want.sort();
        let mut got: Vec<Rational> = mubar_graph(&single_vertex(-p)).unwrap().into_values().collect();
        got.sort();
        prop_assert_eq!(got, want);
    }
}
