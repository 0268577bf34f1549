mod common;

use fanotope_core::families::{construct, FamilyId};
use fanotope_core::isomorphism::{are_isomorphic, classify, dedupe, find_isomorphism, fingerprint};
use fanotope_core::linalg::det;
use fanotope_core::Polytope;
use proptest::prelude::*;

/// Pairwise non-isomorphic members of the corpus.
fn small_corpus() -> Vec<Polytope> {
    common::corpus(4).into_iter().filter(|(n, _)| n != "dp2+cross(1)").map(|(_, p)| p).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_under_unimodular_maps(idx in 0usize..16, seed in any::<u64>()) {
        let corpus = small_corpus();
        let p = &corpus[idx % corpus.len()];
        let mut rng = common::rng(seed);
        let s = common::random_unimodular(&mut rng, p, 10, 5);
        let t = common::random_unimodular(&mut rng, p, 10, 5);
        let (ps, pt) = (p.transformed(&s).unwrap(), p.transformed(&t).unwrap());
        prop_assert_eq!(fingerprint(&ps).unwrap(), fingerprint(p).unwrap());
        prop_assert!(are_isomorphic(p, p).unwrap());
        prop_assert!(are_isomorphic(&ps, &pt).unwrap());
        prop_assert!(are_isomorphic(&pt, &ps).unwrap());
        let w = find_isomorphism(&ps, &pt).unwrap().unwrap();
        prop_assert_eq!(det(&w).unwrap().abs(), 1);
        prop_assert_eq!(ps.transformed(&w).unwrap().sorted_vertices(), pt.sorted_vertices());
    }

    #[test]
    fn dedupe_ignores_duplication_and_order(seed in any::<u64>(), picks in prop::collection::vec(0usize..64, 1..12)) {
        let corpus = small_corpus();
        let mut rng = common::rng(seed);
        let input: Vec<Polytope> = picks
            .iter()
            .map(|&i| {
                let p = &corpus[i % corpus.len()];
                p.transformed(&common::random_unimodular(&mut rng, p, 6, 4)).unwrap()
            })
            .collect();
        let distinct: std::collections::BTreeSet<usize> = picks.iter().map(|&i| i % corpus.len()).collect();
        let a = dedupe(&input).unwrap();
        prop_assert_eq!(a.len(), distinct.len());
        let mut doubled = input.clone();
        doubled.extend(input.iter().rev().cloned());
        let b = dedupe(&doubled).unwrap();
        prop_assert_eq!(
            a.iter().map(|p| p.vertices().to_vec()).collect::<Vec<_>>(),
            b.iter().map(|p| p.vertices().to_vec()).collect::<Vec<_>>()
        );
    }
}

#[test]
fn isomorphism_implies_equal_fingerprints() {
    let corpus = small_corpus();
    for p in &corpus {
        for q in &corpus {
            if are_isomorphic(p, q).unwrap() {
                assert_eq!(fingerprint(p).unwrap(), fingerprint(q).unwrap());
            }
        }
    }
}

#[test]
fn corpus_classes() {
    // P3(3) is the sum of the hexagon and a segment; everything else differs
    let named = common::corpus(4);
    let corpus: Vec<Polytope> = named.iter().map(|(_, p)| p.clone()).collect();
    let classes = classify(&corpus).unwrap();
    assert_eq!(classes.len(), corpus.len() - 1);
    let pos = |n: &str| named.iter().position(|(m, _)| m == n).unwrap();
    assert!(are_isomorphic(&corpus[pos("p3(3)")], &corpus[pos("dp2+cross(1)")]).unwrap());
}

#[test]
fn p2_p3_distinct_odd_dims() {
    for d in [3, 5, 7] {
        let p2 = construct(FamilyId::P2, d).unwrap();
        let p3 = construct(FamilyId::P3, d).unwrap();
        assert!(!are_isomorphic(&p2, &p3).unwrap(), "d = {d}");
    }
}
