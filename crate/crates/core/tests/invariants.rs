use distideal::digraph::{canonical_mask, Digraph, DistanceMatrixKind};
use distideal::ideal::{distance_ideal, ideals_equal, phi, univariate_distance_ideal};
use distideal::linalg::{gcd_of_minors, smith_normal_form};
use distideal::pattern::{classify, is_gamma1_pattern_free};
use distideal::BigMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;

fn strong_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 0u64..1 << (n * (n - 1))))
        .prop_map(|(n, mask)| Digraph::from_mask(n, mask).unwrap())
        .prop_filter("strong", Digraph::is_strong)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Digraph, Digraph)> {
    strong_digraph(max_n).prop_flat_map(|g| {
        let n = g.n();
        permutation(n).prop_map(move |p| (g.clone(), g.relabeled(&p).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_survive_relabelling((g, h) in relabelled(5)) {
        prop_assert_eq!(canonical_mask(&g).unwrap(), canonical_mask(&h).unwrap());
        for kind in [DistanceMatrixKind::D, DistanceMatrixKind::DL, DistanceMatrixKind::DQ] {
            prop_assert_eq!(smith_normal_form(&g.distance_matrix(kind).unwrap()), smith_normal_form(&h.distance_matrix(kind).unwrap()));
        }
        prop_assert_eq!(is_gamma1_pattern_free(&g).unwrap(), is_gamma1_pattern_free(&h).unwrap());
        prop_assert_eq!(classify(&g).unwrap().class, classify(&h).unwrap().class);
    }

    #[test]
    fn phi_survives_relabelling((g, h) in relabelled(4)) {
        prop_assert_eq!(phi(&g).unwrap(), phi(&h).unwrap());
    }

    #[test]
    fn reversal_transposes_the_distance_matrix(g in strong_digraph(5)) {
        let d = g.distance_matrix(DistanceMatrixKind::D).unwrap();
        let r = g.reversed().distance_matrix(DistanceMatrixKind::D).unwrap();
        prop_assert_eq!(&r, &d.transpose());
        prop_assert_eq!(smith_normal_form(&d), smith_normal_form(&r));
    }

    #[test]
    fn ideals_form_a_chain(g in strong_digraph(4)) {
        for k in 1..g.n() {
            let big = distance_ideal(&g, k).unwrap();
            let small = distance_ideal(&g, k + 1).unwrap();
            prop_assert!(big.contains_ideal(&small).unwrap(), "I_{} does not contain I_{}", k, k + 1);
        }
    }

    #[test]
    fn evaluation_matches_integer_minors(g in strong_digraph(4), point in prop::collection::vec(-3i64..=3, 4)) {
        let n = g.n();
        let point: Vec<BigInt> = point[..n].iter().map(|&v| BigInt::from(v)).collect();
        let d = g.distance_matrix(DistanceMatrixKind::D).unwrap();
        let shifted = BigMatrix::from_fn(n, n, |i, j| if i == j { d.get(i, j) + &point[i] } else { d.get(i, j).clone() });
        for k in 1..=n {
            let value = distance_ideal(&g, k).unwrap().evaluate(&point).unwrap();
            prop_assert_eq!(value, gcd_of_minors(&shifted, k).unwrap());
        }
    }

    #[test]
    fn univariate_ideal_is_the_collapse(g in strong_digraph(4)) {
        for k in 1..=g.n() {
            let u = univariate_distance_ideal(&g, k).unwrap();
            let collapsed = distance_ideal(&g, k).unwrap().collapse_to_t();
            prop_assert!(ideals_equal(&u, &collapsed).unwrap());
        }
    }
}
