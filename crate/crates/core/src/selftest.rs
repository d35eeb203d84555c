//! The reproducible acceptance suite: combinatorial sweeps with a fixed seed
//! and the algebra instances, each reported as one pass/fail line.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::akalgebra::{
    assess_weight_one_block, lambda_sets, AKParams,
    AlgebraData, BlockVerdict, Fault, VerifyOptions,
};
use crate::blocks::{
    classify_weight_one, conjugate_params, partition_into_blocks, verify_paired_sums, weight, BlockClass, ResidueContent,
    ResidueParams,
};
use crate::error::Result;
use crate::ffield::FieldContext;
use crate::partitions::{count_standard_tableaux, dominates, enumerate_multipartitions, MultiPartition};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy)]
pub struct SelftestOptions {
    /// Combinatorial criteria only.
    pub quick: bool,
    pub fault: Option<Fault>,
    pub seed: u64,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        Self { quick: false, fault: None, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub number: u32,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

/// Criteria that need no algebra construction.
pub const COMBINATORIAL: [u32; 6] = [1, 2, 3, 4, 5, 6];
pub const ALL: [u32; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

pub fn statement(number: u32) -> &'static str {
    match number {
        1 => "worked weight example",
        2 => "bipartition conjugation preserves weight",
        3 => "reversed-parameter conjugation preserves weight",
        4 => "conjugation reverses dominance",
        5 => "block weight invariance",
        6 => "weight-one blocks are dominance chains",
        7 => "three-member weight-one block on the algebra",
        8 => "two-member weight-one block on the algebra",
        9 => "structural identities of built algebras",
        10 => "block radical certified by hypotheses and corollaries",
        _ => "unknown criterion",
    }
}

/// Outcome of one criterion: `Ok(detail)` passes, `Err(detail)` fails.
type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run_criterion(number: u32, opts: &SelftestOptions) -> CriterionResult {
    let start = Instant::now();
    let outcome = match number {
        1 => worked_example(),
        2 => bipartition_conjugation(opts.seed),
        3 => reversed_parameter_conjugation(opts.seed),
        4 => dominance_reversal(),
        5 => block_invariance(opts.seed).map(|(d, _)| d),
        6 => weight_one_chains(opts.seed),
        7 => instance_three_member(opts.fault),
        8 => instance_two_member(opts.fault),
        9 => structural_suite(opts.seed, opts.fault),
        10 => certification_sweep(opts.fault),
        _ => Err(format!("no criterion {number}")),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { number, statement: statement(number), passed, detail, elapsed_ms: elapsed.as_millis() }
}

pub fn run_selftest(opts: &SelftestOptions) -> Vec<CriterionResult> {
    let which: &[u32] = if opts.quick { &COMBINATORIAL } else { &ALL };
    which.iter().map(|&n| run_criterion(n, opts)).collect()
}

fn within(limit: Duration, start: Instant, what: &str) -> std::result::Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let params = lib(ResidueParams::new(9, &[1, 1, 5, 2]))?;
    let lam: MultiPartition = lib("3,3,2|2,1|1,1,1,1,1,1|2,2,1".parse())?;
    let w = lib(weight(&lam, &params))?;
    let wc = lib(weight(&lam.conjugate(), &params))?;
    ensure(w == 1 && wc == 6, || format!("w(λ) = {w}, w(λ') = {wc}; expected 1 and 6"))?;
    within(Duration::from_secs(1), start, "the worked example")?;
    Ok(format!("w(λ) = {w}, w(λ') = {wc}"))
}

fn random_params(rng: &mut StdRng, e_max: u32, r: usize) -> ResidueParams {
    let e = rng.gen_range(2..=e_max);
    let a: Vec<i64> = (0..r).map(|_| rng.gen_range(0..e) as i64).collect();
    ResidueParams::new(e, &a).expect("e ≥ 2 and r ≥ 1")
}

fn bipartition_conjugation(seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes: Vec<MultiPartition> = (0..=6).flat_map(|n| enumerate_multipartitions(n, 2)).collect();
    let mut checked = 0usize;
    for _ in 0..200 {
        let params = random_params(&mut rng, 12, 2);
        for lam in &shapes {
            let (w, wc) = (lib(weight(lam, &params))?, lib(weight(&lam.conjugate(), &params))?);
            ensure(w == wc, || format!("e = {}, a = {:?}, λ = {lam}: {w} ≠ {wc}", params.e(), params.a()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs over {} bipartitions and 200 parameter choices", shapes.len()))
}

fn reversed_parameter_conjugation(seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5);
    let by_r: Vec<Vec<MultiPartition>> =
        (1..=4).map(|r| (0..=5).flat_map(|n| enumerate_multipartitions(n, r)).collect()).collect();
    let mut checked = 0usize;
    for i in 0..100 {
        let r = 1 + i % 4;
        let params = random_params(&mut rng, 12, r);
        let conj = conjugate_params(&params);
        for lam in &by_r[r - 1] {
            let (w, wc) = (lib(weight(lam, &params))?, lib(weight(&lam.conjugate(), &conj))?);
            ensure(w == wc, || format!("e = {}, a = {:?}, λ = {lam}: {w} ≠ {wc}", params.e(), params.a()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs over 100 parameter tuples with r ≤ 4, n ≤ 5"))
}

fn dominance_reversal() -> Outcome {
    let mut pairs = 0usize;
    for r in 1..=3 {
        for n in 0..=6 {
            let shapes = enumerate_multipartitions(n, r);
            let conj: Vec<MultiPartition> = shapes.iter().map(MultiPartition::conjugate).collect();
            for (i, lam) in shapes.iter().enumerate() {
                for (j, mu) in shapes.iter().enumerate() {
                    let a = lib(dominates(lam, mu))?;
                    let b = lib(dominates(&conj[j], &conj[i]))?;
                    ensure(a == b, || format!("λ = {lam}, μ = {mu}: λ ⊵ μ is {a} but μ' ⊵ λ' is {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs with r ≤ 3, n ≤ 6"))
}

/// The 50 parameter tuples of the block sweep, `r ≤ 3`, `e ≤ 6`.
fn sweep_params(seed: u64) -> Vec<ResidueParams> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x50);
    (0..50).map(|i| random_params(&mut rng, 6, 1 + i % 3)).collect()
}

fn block_invariance(seed: u64) -> std::result::Result<(String, Vec<(ResidueParams, BlockClass)>), String> {
    let mut blocks = 0usize;
    let mut weight_one = Vec::new();
    for params in sweep_params(seed) {
        for n in 0..=6 {
            for b in lib(partition_into_blocks(n, &params))? {
                for m in &b.members {
                    let w = lib(weight(m, &params))?;
                    ensure(w == b.weight, || format!("{m} has weight {w} in a block of weight {}", b.weight))?;
                }
                blocks += 1;
                if b.weight == 1 {
                    weight_one.push((params.clone(), b));
                }
            }
        }
    }
    Ok((format!("{blocks} blocks over 50 parameter tuples, n ≤ 6, r ≤ 3"), weight_one))
}

fn weight_one_chains(seed: u64) -> Outcome {
    let (_, found) = block_invariance(seed)?;
    ensure(!found.is_empty(), || "the sweep found no weight-one block".into())?;
    let mut longest = 0;
    let mut paired = 0;
    for (params, b) in &found {
        let report = lib(classify_weight_one(b, params))?;
        ensure(report.s <= params.e() as usize, || format!("s = {} > e = {}", report.s, params.e()))?;
        longest = longest.max(report.s);
        if params.r() >= 2 {
            let pr = lib(verify_paired_sums(b, params))?;
            ensure(pr.holds(), || format!("paired sums fail for block {:?}: {:?}", b.content.0, pr.sums))?;
            paired += 1;
        }
    }
    Ok(format!("{} weight-one blocks are chains (longest s = {longest}); {paired} paired-sum checks", found.len()))
}

fn ak(p: u32, q: i64, a: &[i64], n: usize) -> std::result::Result<AKParams, String> {
    lib(AKParams::new(lib(FieldContext::new(p, q))?, a, n))
}

fn failed_checks(v: &BlockVerdict) -> std::result::Result<(), String> {
    match v.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.statement, c.detail)),
    }
}

fn instance_three_member(fault: Option<Fault>) -> Outcome {
    let start = Instant::now();
    let params = ak(7, 2, &[0, 1], 2)?;
    let v = lib(assess_weight_one_block(&params, &ResidueContent(vec![1, 1, 0]), &VerifyOptions { fault, ..Default::default() }))?;
    failed_checks(&v)?;
    let chain: Vec<String> = v.chain.iter().map(|x| x.to_string()).collect();
    let block_dims: Vec<usize> = v.blocks.iter().map(|b| b.dim).collect();
    let names = |xs: &[MultiPartition]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    ensure(v.dim_H == 8, || format!("dim H = {}", v.dim_H))?;
    ensure(block_dims == [6, 1, 1], || format!("block dims {block_dims:?}"))?;
    ensure(chain == ["-|1,1", "1|1", "2|-"], || format!("chain {chain:?}"))?;
    ensure(v.n_lambda == [1, 2, 1], || format!("n_λ {:?}", v.n_lambda))?;
    ensure(v.dim_L == [1, 1], || format!("dim L {:?}", v.dim_L))?;
    let s = &v.lambda_sets;
    ensure(
        names(&s.lambda0) == ["1|1", "-|1,1"] || names(&s.lambda0) == ["-|1,1", "1|1"],
        || format!("Λ0 {:?}", names(&s.lambda0)),
    )?;
    ensure(names(&s.lambda1) == ["-|1,1"], || format!("Λ1 {:?}", names(&s.lambda1)))?;
    ensure(names(&s.lambda2) == ["1|1"], || format!("Λ2 {:?}", names(&s.lambda2)))?;
    ensure(names(&s.lambda3) == ["2|-"], || format!("Λ3 {:?}", names(&s.lambda3)))?;
    ensure(names(&s.lambda4) == ["-|1,1"], || format!("Λ4 {:?}", names(&s.lambda4)))?;
    ensure(v.cells.iter().all(|c| c.k == 0), || "k_λ ≠ 0 on the block".into())?;
    ensure(v.dim_radB == 4, || format!("dim rad B = {}", v.dim_radB))?;
    ensure(v.radB_square_dim > 0, || "(rad B)² = 0".into())?;
    ensure(v.radB_cube_dim == 0, || format!("dim (rad B)³ = {}", v.radB_cube_dim))?;
    ensure(v.mirror.params.ctx().q() == 4 && v.mirror.params.a() == [2, 0], || "unexpected mirror parameters".into())?;
    ensure(v.central_ideals.l_equals_r, || "L(B) ≠ R(B)".into())?;
    within(Duration::from_secs(10), start, "instance A")?;
    Ok(format!(
        "dim B = 6, dim rad B = 4, dim (rad B)² = {}, (rad B)³ = 0, dim L(B) = dim R(B) = {}",
        v.radB_square_dim, v.central_ideals.dim_reynolds
    ))
}

fn instance_two_member(fault: Option<Fault>) -> Outcome {
    let start = Instant::now();
    let params = ak(5, 4, &[0, 0], 1)?;
    let v = lib(assess_weight_one_block(&params, &ResidueContent(vec![1, 0]), &VerifyOptions { fault, ..Default::default() }))?;
    failed_checks(&v)?;
    ensure(v.s == 2 && v.dim_B == 2, || format!("s = {}, dim B = {}", v.s, v.dim_B))?;
    ensure(v.dim_radB == 1, || format!("dim rad B = {}", v.dim_radB))?;
    ensure(v.radB_square_dim == 0, || format!("dim (rad B)² = {}", v.radB_square_dim))?;
    ensure(v.cells.iter().all(|c| c.k == 0), || "k_λ ≠ 0 on the block".into())?;
    ensure(v.central_ideals.l_equals_r, || "L(B) ≠ R(B)".into())?;
    within(Duration::from_secs(1), start, "instance B")?;
    Ok(format!("dim rad B = 1, (rad B)² = 0, dim L(B) = dim R(B) = {}", v.central_ideals.dim_reynolds))
}

/// Parameter sets with `r = 2`, `n ≤ 3` for the structural suite.
pub fn structural_instances() -> Vec<(u32, i64, Vec<i64>, usize)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((7, 2, vec![0, 1], n));
        out.push((5, 4, vec![0, 0], n));
        out.push((7, 6, vec![0, 1], n));
    }
    out.push((13, 3, vec![0, 1, 2], 2));
    out
}

fn structural_one(params: &AKParams, seed: u64, fault: Option<Fault>) -> std::result::Result<(), String> {
    let data = lib(AlgebraData::compute(params, &VerifyOptions { fault, ..Default::default() }))?;
    let t = &data.table;
    for rel in t.check_relations() {
        ensure(rel.holds, || format!("relation {} fails", rel.name))?;
    }
    ensure(t.generators_invertible(), || "a generator acts singularly".into())?;
    let bad = data.gram.product_identity_failures();
    ensure(bad.is_empty(), || format!("Gram product identity G(λ)G'(λ) = k_λ E fails on {} cells", bad.len()))?;
    let quasi = crate::akalgebra::quasi_idempotent_failures(t, &data.cells, &data.dual, &data.gram);
    ensure(quasi.is_empty(), || "quasi-idempotent identity fails".into())?;
    ensure(crate::akalgebra::duality_violation(t, &data.cells, &data.dual).is_none(), || "duality δ-pattern fails".into())?;
    ensure(data.gram.asymmetric().is_empty(), || "a Gram matrix is not symmetric".into())?;

    let expected = params.dimension().ok_or("dimension overflow")?;
    let sum_sq: usize = data
        .cells
        .cells
        .iter()
        .map(|c| usize::try_from(count_standard_tableaux(&c.shape)).map(|k| k * k))
        .sum::<std::result::Result<usize, _>>()
        .map_err(|e| e.to_string())?;
    ensure(t.dim() == expected && sum_sq == expected, || format!("dim {} vs r^n n! = {expected}, Σ n_λ² = {sum_sq}", t.dim()))?;
    let ss: usize = data.gram.cells.iter().map(|c| c.rank * c.rank).sum();
    ensure(data.radical.dim() + ss == t.dim(), || "dim rad A ≠ dim A - Σ (dim L)²".into())?;

    // Λ-sets of the whole algebra split along the blocks.
    let global = lambda_sets(&data.gram);
    let mut union = vec![Vec::new(); 5];
    for b in &data.center.blocks {
        let r = global.restricted(&b.cells);
        for (k, v) in [r.lambda0, r.lambda1, r.lambda2, r.lambda3, r.lambda4].into_iter().enumerate() {
            union[k].extend(v);
        }
    }
    for u in &mut union {
        u.sort_unstable();
    }
    let whole = [global.lambda0, global.lambda1, global.lambda2, global.lambda3, global.lambda4];
    ensure(union.iter().zip(&whole).all(|(a, b)| a == b), || "block Λ-sets do not partition the global Λ-sets".into())?;

    // associativity on random basis triples
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..500 {
        let (i, j, k) = (rng.gen_range(0..t.dim()), rng.gen_range(0..t.dim()), rng.gen_range(0..t.dim()));
        let (x, y, z) = (t.basis_vector(i), t.basis_vector(j), t.basis_vector(k));
        ensure(t.mul(&t.mul(&x, &y), &z) == t.mul(&x, &t.mul(&y, &z)), || format!("(b{i} b{j}) b{k} ≠ b{i} (b{j} b{k})"))?;
    }
    Ok(())
}

fn structural_suite(seed: u64, fault: Option<Fault>) -> Outcome {
    let instances = structural_instances();
    for (idx, (p, q, a, n)) in instances.iter().enumerate() {
        let params = ak(*p, *q, a, *n)?;
        // The fault is injected into the first instance only.
        let f = if idx == 0 { fault } else { None };
        structural_one(&params, seed + idx as u64, f).map_err(|e| format!("p={p} q={q} a={a:?} n={n}: {e}"))?;
    }
    Ok(format!("{} algebras: relations, trace, duality, Gram identities, dimensions, Λ-set restriction", instances.len()))
}

/// Parameter sets whose weight-one blocks are all verified on the algebra.
pub fn certification_instances() -> Vec<(u32, i64, Vec<i64>, usize)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((7, 2, vec![0, 1], n));
        out.push((7, 2, vec![0, 0], n));
        out.push((5, 4, vec![0, 0], n));
        out.push((5, 4, vec![0, 1], n));
        out.push((5, 2, vec![0, 1], n));
        out.push((11, 3, vec![0, 2], n));
    }
    out.push((13, 3, vec![0, 1, 2], 2));
    out.push((13, 3, vec![0, 0, 1], 2));
    out
}

/// Every weight-one block of the given algebra, verified.
pub fn verify_all_weight_one(params: &AKParams, opts: &VerifyOptions) -> Result<Vec<BlockVerdict>> {
    let rp = params.residue_params();
    let mut out = Vec::new();
    for b in partition_into_blocks(params.n(), &rp)? {
        if b.weight == 1 {
            out.push(assess_weight_one_block(params, &b.content, opts)?);
        }
    }
    Ok(out)
}

fn certification_sweep(fault: Option<Fault>) -> Outcome {
    let mut verified = 0usize;
    let mut longest = 0usize;
    // The fault corrupts only the first cell, which need not lie in a
    // weight-one block, so it is applied to every instance.
    for (p, q, a, n) in certification_instances() {
        let params = ak(p, q, &a, n)?;
        let verdicts = verify_all_weight_one(&params, &VerifyOptions { fault, ..Default::default() })
            .map_err(|e| format!("p={p} q={q} a={a:?} n={n}: {e}"))?;
        for v in &verdicts {
            failed_checks(v).map_err(|e| format!("p={p} q={q} a={a:?} n={n} content {:?}: {e}", v.content))?;
            longest = longest.max(v.s);
        }
        verified += verdicts.len();
    }
    ensure(verified > 0, || "no weight-one block was verified".into())?;
    Ok(format!("{verified} weight-one blocks pass every check (longest chain s = {longest})"))
}
