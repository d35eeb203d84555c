use akblocks_core::blocks::{
    classify_weight_one, conjugate_params, content, partition_into_blocks, verify_paired_sums, weight, ResidueParams,
};
use akblocks_core::partitions::{dominates, enumerate_multipartitions, factorial, MultiPartition, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 0..=max_size).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn multipartition(r: usize) -> impl Strategy<Value = MultiPartition> {
    prop::collection::vec(partition(3), r).prop_map(|c| MultiPartition::new(c).unwrap())
}

/// `(e, a, λ)` with `λ` an r-partition matching `a`.
fn instance() -> impl Strategy<Value = (u32, Vec<i64>, MultiPartition)> {
    (2u32..7, 1usize..4).prop_flat_map(|(e, r)| (Just(e), prop::collection::vec(0i64..7, r), multipartition(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn weight_is_nonnegative((e, a, lam) in instance()) {
        let p = ResidueParams::new(e, &a).unwrap();
        prop_assert!(weight(&lam, &p).unwrap() >= 0);
    }

    #[test]
    fn conjugation_under_reversed_parameters_keeps_weight((e, a, lam) in instance()) {
        let p = ResidueParams::new(e, &a).unwrap();
        let pc = conjugate_params(&p);
        prop_assert_eq!(weight(&lam, &p).unwrap(), weight(&lam.conjugate(), &pc).unwrap());
    }

    #[test]
    fn conjugation_negates_residue_content((e, a, lam) in instance()) {
        let p = ResidueParams::new(e, &a).unwrap();
        let c = content(&lam, &p).unwrap();
        let cc = content(&lam.conjugate(), &conjugate_params(&p)).unwrap();
        prop_assert_eq!(c.total(), lam.size());
        for i in 0..e as usize {
            prop_assert_eq!(c.0[i], cc.0[(e as usize - i) % e as usize]);
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_keeps_tableau_count(lam in multipartition(3)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().standard_tableaux_count(), lam.standard_tableaux_count());
    }

    #[test]
    fn conjugation_reverses_dominance(n in 0usize..7, r in 1usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = enumerate_multipartitions(n, r);
        let (lam, mu) = (i.get(&all), j.get(&all));
        prop_assert_eq!(dominates(lam, mu).unwrap(), dominates(&mu.conjugate(), &lam.conjugate()).unwrap());
    }

    #[test]
    fn display_round_trips(lam in multipartition(3)) {
        let back: MultiPartition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }
}

#[test]
fn tableau_counts_square_sum_to_algebra_dimension() {
    for r in 1..=3usize {
        for n in 0..=5usize {
            let total: BigUint = enumerate_multipartitions(n, r).iter().map(|l| {
                let k = l.standard_tableaux_count();
                &k * &k
            }).sum();
            assert_eq!(total, BigUint::from(r).pow(n as u32) * factorial(n), "r={r} n={n}");
        }
    }
}

#[test]
fn blocks_partition_every_multipartition() {
    for (e, a) in [(2u32, vec![0i64, 0]), (3, vec![0, 1]), (4, vec![0, 2, 3]), (5, vec![1])] {
        let p = ResidueParams::new(e, &a).unwrap();
        for n in 0..=5 {
            let blocks = partition_into_blocks(n, &p).unwrap();
            let count: usize = blocks.iter().map(|b| b.members.len()).sum();
            assert_eq!(count, enumerate_multipartitions(n, a.len()).len());
            for b in &blocks {
                assert_eq!(b.content.total(), n);
                assert!(b.members.iter().all(|m| content(m, &p).unwrap() == b.content));
            }
        }
    }
}

#[test]
fn weight_zero_blocks_are_singletons() {
    for (e, a) in [(2u32, vec![0i64, 1]), (3, vec![0, 0]), (3, vec![0, 1, 2])] {
        let p = ResidueParams::new(e, &a).unwrap();
        for n in 0..=5 {
            for b in partition_into_blocks(n, &p).unwrap() {
                if b.weight == 0 {
                    assert_eq!(b.members.len(), 1, "content {:?}", b.content.0);
                }
            }
        }
    }
}

#[test]
fn weight_one_reports_are_consistent() {
    for (e, a) in [(2u32, vec![0i64, 1]), (3, vec![0, 1]), (3, vec![0, 0, 2]), (4, vec![0, 1])] {
        let p = ResidueParams::new(e, &a).unwrap();
        for n in 1..=6 {
            for b in partition_into_blocks(n, &p).unwrap().into_iter().filter(|b| b.weight == 1) {
                let rep = classify_weight_one(&b, &p).unwrap();
                let mut chain = b.dominance_chain().expect("weight-one blocks are chains");
                chain.reverse();
                assert_eq!(rep.chain, chain);
                assert_eq!(rep.s, b.members.len());
                // Each cell module has the simple of its own label on top and
                // the next more dominant simple underneath.
                for i in 0..rep.s {
                    let simple = rep.dim_simple.get(i).copied().unwrap_or(0);
                    assert_eq!(rep.n_lambda[i], simple + rep.dim_rad_cell[i]);
                }
                assert!(verify_paired_sums(&b, &p).unwrap().holds());
            }
        }
    }
}

#[test]
fn classify_rejects_other_weights() {
    let p = ResidueParams::new(2, &[0, 1]).unwrap();
    let b = partition_into_blocks(3, &p).unwrap().into_iter().find(|b| b.weight != 1).unwrap();
    assert!(classify_weight_one(&b, &p).is_err());
}
