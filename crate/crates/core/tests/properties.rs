mod common;

use lwd_core::relations::{extend_lwd, parity_split, puncture_lwd_transitive};
use lwd_core::symmetry::Permutation;
use lwd_core::{
    category_tallies, is_zero_neighbor, local_weight_distribution, random_linear_code, reed_muller,
    verify_all_relations, weight_distribution, BinaryMatrix, LinearCode, LwdReport, SweepOptions,
    VerifyOptions, WeightTally,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_code() -> impl Strategy<Value = LinearCode> {
    (3usize..=12, 1usize..=6, any::<u64>())
        .prop_map(|(n, k, seed)| random_linear_code(n, k.min(n), seed).unwrap())
}

fn permuted(code: &LinearCode, p: &Permutation) -> LinearCode {
    let rows = code
        .generator()
        .rows()
        .iter()
        .map(|r| p.apply(r).unwrap())
        .collect();
    LinearCode::new(BinaryMatrix::new(code.n(), rows).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_test_matches_support_scan(code in small_code()) {
        let minimal = common::neighbors_by_full_scan(&code);
        for v in common::codewords(&code).iter().filter(|v| !v.is_zero()) {
            prop_assert_eq!(is_zero_neighbor(&code, v).unwrap(), minimal.contains(v));
        }
        prop_assert_eq!(common::neighbors_by_weight_order(&code).len(), minimal.len());
    }

    #[test]
    fn tallies_match_oracles(code in small_code()) {
        let t = category_tallies(&code, &SweepOptions::default()).unwrap();
        prop_assert_eq!(&t.weights, &common::oracle_weights(&code));
        prop_assert_eq!(&t.indecomposable, &common::oracle_lwd(&code));
        prop_assert_eq!(&t.only_odd, &common::oracle_only_odd(&code));
    }

    #[test]
    fn lwd_is_permutation_invariant(code in small_code(), seed in any::<u64>()) {
        let n = code.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = Permutation::new(images).unwrap();
        let opts = SweepOptions::default();
        prop_assert_eq!(
            local_weight_distribution(&code, false, &opts).unwrap(),
            local_weight_distribution(&permuted(&code, &p), false, &opts).unwrap()
        );
    }

    #[test]
    fn puncturing_the_extension_restores_the_code(code in small_code()) {
        let ex = code.extend();
        prop_assert!(ex.puncture(code.n()).unwrap().same_code(&code));
        prop_assert!(weight_distribution(&ex, &SweepOptions::default()).unwrap().iter().all(|(w, _)| w % 2 == 0));
    }

    #[test]
    fn even_subcode_has_index_at_most_two(code in small_code()) {
        let even = code.even_subcode();
        let expected = if code.has_odd_weight_word() { code.k() - 1 } else { code.k() };
        prop_assert_eq!(even.k(), expected);
        prop_assert!(even.is_subcode_of(&code));
        prop_assert!(even.generator().rows().iter().all(|r| !r.parity()));
    }

    #[test]
    fn all_relations_hold(code in small_code()) {
        let suite = verify_all_relations(&code, &VerifyOptions::default()).unwrap();
        prop_assert!(suite.passed(), "{:#?}", suite);
    }

    #[test]
    fn partitions_do_not_change_tallies(code in small_code(), parts in 1usize..=9) {
        let one = category_tallies(&code, &SweepOptions::with_partitions(1)).unwrap();
        let many = category_tallies(&code, &SweepOptions::with_partitions(parts)).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn report_json_round_trip(counts in prop::collection::btree_map(0usize..=127, any::<u128>(), 0..20), k in any::<Option<u8>>()) {
        let lwd = WeightTally::from_pairs(127, counts.iter().map(|(&w, &c)| (w, BigUint::from(c) * 1_000_000u32))).unwrap();
        let mut r = LwdReport::new("prop", k.map(usize::from), "brute", lwd.clone());
        r.weights = Some(lwd);
        r.duration_ms = 17;
        prop_assert_eq!(LwdReport::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn puncture_inverts_extend_on_reed_muller() {
    let opts = SweepOptions::default();
    for (r, m) in [(1, 3), (1, 4), (2, 4), (2, 5), (1, 5), (0, 4)] {
        let full = reed_muller(r, m).unwrap();
        let c = full.puncture(full.n() - 1).unwrap();
        let t = category_tallies(&c, &opts).unwrap();
        let ex = extend_lwd(&t.indecomposable, &t.only_odd).unwrap();
        assert_eq!(
            ex,
            local_weight_distribution(&full, false, &opts).unwrap(),
            "RM({r},{m})"
        );
        assert_eq!(
            puncture_lwd_transitive(&ex, &t.only_odd).unwrap(),
            t.indecomposable,
            "RM({r},{m})"
        );

        let (ones, zeros) = parity_split(&ex).unwrap();
        let mut sum = ones.clone();
        sum.merge(&zeros).unwrap();
        assert_eq!(sum, ex);
    }
}
