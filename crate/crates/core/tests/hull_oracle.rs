mod common;

use fanotope_core::hull::{facets_by_pivoting, facets_by_subsets};
use fanotope_core::linalg::{det, det_cofactor, IntMatrix};
use fanotope_core::polytope::{facet_enumeration, facet_enumeration_brute_force};
use proptest::prelude::*;

#[test]
fn pivoting_matches_subsets_on_corpus() {
    for (name, p) in common::corpus_with_images(4, 40, 7) {
        let a = facet_enumeration(p.dim(), p.vertices()).unwrap();
        let b = facet_enumeration_brute_force(p.dim(), p.vertices()).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(a.len(), p.facets().len(), "{name}");
    }
}

#[test]
fn non_simplicial_and_redundant_points() {
    let mut cube: Vec<Vec<i64>> = (0..8).map(|m| (0..3).map(|k| if m >> k & 1 == 1 { 1 } else { -1 }).collect()).collect();
    cube.push(vec![0, 0, 1]);
    cube.push(vec![0, 0, 0]);
    cube.push(vec![1, 0, 1]);
    assert_eq!(facets_by_pivoting(&cube, 3).unwrap(), facets_by_subsets(&cube, 3).unwrap());
}

fn point_set(d: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, d), d + 1..d + 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_sets_agree((d, pts) in (2usize..=4).prop_flat_map(|d| (Just(d), point_set(d)))) {
        match (facets_by_pivoting(&pts, d), facets_by_subsets(&pts, d)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "disagree on full-dimensionality: {} vs {}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn bareiss_matches_cofactor(rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))) {
        let m = IntMatrix::new(rows).unwrap();
        prop_assert_eq!(det(&m).unwrap(), det_cofactor(&m).unwrap());
    }
}
