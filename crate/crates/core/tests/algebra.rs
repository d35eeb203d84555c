use akblocks_core::akalgebra::{
    assess_weight_one_block, build_algebra, lambda_sets, radical_powers, AKParams, AlgebraData, AlgebraTable,
    VerifyOptions,
};
use akblocks_core::blocks::{partition_into_blocks, ResidueContent};
use akblocks_core::ffield::FieldContext;
use akblocks_core::Error;
use rand::{Rng, SeedableRng};

fn params(p: u32, q: i64, a: &[i64], n: usize) -> AKParams {
    AKParams::new(FieldContext::new(p, q).unwrap(), a, n).unwrap()
}

fn random_element(t: &AlgebraTable, rng: &mut impl Rng) -> Vec<u32> {
    let p = t.field().modulus();
    (0..t.dim()).map(|_| rng.gen_range(0..p)).collect()
}

#[test]
fn built_algebras_satisfy_their_relations() {
    for ps in [params(7, 2, &[0, 1], 2), params(5, 4, &[0, 0], 3), params(13, 3, &[0, 1, 2], 2)] {
        let t = build_algebra(&ps).unwrap();
        assert_eq!(Some(t.dim()), ps.dimension());
        for rel in t.check_relations() {
            assert!(rel.holds, "{} fails for a={:?} n={}", rel.name, ps.a(), ps.n());
        }
        assert!(t.generators_invertible());
        assert!(t.words_span());
    }
}

#[test]
fn multiplication_is_associative_and_trace_is_symmetric() {
    let t = build_algebra(&params(7, 6, &[0, 1], 3)).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..6 {
        let (x, y, z) = (random_element(&t, &mut rng), random_element(&t, &mut rng), random_element(&t, &mut rng));
        assert_eq!(t.mul(&t.mul(&x, &y), &z), t.mul(&x, &t.mul(&y, &z)));
        assert_eq!(t.trace(&t.mul(&x, &y)), t.trace(&t.mul(&y, &x)));
        assert_eq!(t.mul(&t.one(), &x), x);
        // The anti-involution reverses products.
        assert_eq!(t.star(&t.mul(&x, &y)), t.mul(&t.star(&y), &t.star(&x)));
    }
}

#[test]
fn dimension_cap_is_enforced() {
    let err = AlgebraTable::build(&params(7, 2, &[0, 1], 3), 40).unwrap_err();
    assert!(matches!(err, Error::ResourceCap(_)), "{err}");
    let opts = VerifyOptions { cap: 4, ..Default::default() };
    let err = assess_weight_one_block(&params(7, 2, &[0, 1], 2), &ResidueContent(vec![1, 1, 0]), &opts).unwrap_err();
    assert!(matches!(err, Error::ResourceCap(_)), "{err}");
}

#[test]
fn blocks_other_than_weight_one_are_rejected() {
    let ps = params(7, 2, &[0, 1], 2);
    let err = assess_weight_one_block(&ps, &ResidueContent(vec![0, 1, 1]), &VerifyOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
    let err = assess_weight_one_block(&ps, &ResidueContent(vec![2, 0, 0]), &VerifyOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
}

#[test]
fn radical_vanishes_exactly_when_every_block_has_weight_zero() {
    // q = 3 has order 5 modulo 11, so small n sits below the first weight-one block.
    for ps in [params(11, 3, &[0, 2], 1), params(11, 3, &[0, 2], 2), params(7, 2, &[0, 1], 2), params(5, 4, &[0, 0], 2)] {
        let data = AlgebraData::compute(&ps, &VerifyOptions::default()).unwrap();
        let all_zero = partition_into_blocks(ps.n(), &ps.residue_params()).unwrap().iter().all(|b| b.weight == 0);
        assert_eq!(data.radical.dim() == 0, all_zero, "a={:?} n={}", ps.a(), ps.n());
        if all_zero {
            assert!(data.gram.cells.iter().all(|c| c.k != 0));
            assert_eq!(lambda_sets(&data.gram).lambda1.len(), data.cells.cells.len());
        }
    }
}

#[test]
fn block_idempotents_split_the_radical() {
    let ps = params(7, 2, &[0, 1], 3);
    let data = AlgebraData::compute(&ps, &VerifyOptions::default()).unwrap();
    let total: usize = data
        .center
        .blocks
        .iter()
        .map(|b| radical_powers(&data.table, &data.radical, &b.idempotent).rad.dim())
        .sum();
    assert_eq!(total, data.radical.dim());
}

#[test]
fn every_weight_one_block_of_small_algebras_passes() {
    let mut longest = 0;
    for ps in [params(7, 2, &[0, 0], 3), params(13, 3, &[0, 1, 2], 2), params(13, 3, &[0, 0, 1], 2)] {
        for b in partition_into_blocks(ps.n(), &ps.residue_params()).unwrap().into_iter().filter(|b| b.weight == 1) {
            let v = assess_weight_one_block(&ps, &b.content, &VerifyOptions::default()).unwrap();
            let failed: Vec<_> = v.failures().map(|c| c.statement.clone()).collect();
            assert!(v.all_passed, "a={:?} content {:?}: {failed:?}", ps.a(), b.content.0);
            assert_eq!(v.s, b.members.len());
            assert_eq!(v.radB_square_dim > 0, v.s > 2);
            assert_eq!(v.radB_cube_dim, 0);
            let reversed: Vec<_> = v.chain.iter().rev().map(|m| m.conjugate()).collect();
            assert_eq!(v.mirror.chain, reversed);
            longest = longest.max(v.s);
        }
    }
    assert!(longest >= 3, "no block with a nonzero radical square was exercised");
}
