//! Residues, weights and blocks of r-partitions.
//!
//! All cyclotomic parameters are powers of `q`, so a residue `q^{j-i} Q_k` is
//! stored as its exponent `j - i + a_k` modulo `e`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{dominates, enumerate_multipartitions, MultiPartition, Node};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueParams {
    e: u32,
    a: Vec<u32>,
}

impl ResidueParams {
    /// `a` entries are reduced mod `e`.
    pub fn new(e: u32, a: &[i64]) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e = {e} must be at least 2")));
        }
        if a.is_empty() {
            return Err(Error::InvalidParameter("need at least one cyclotomic parameter".into()));
        }
        Ok(Self { e, a: a.iter().map(|&x| x.rem_euclid(e as i64) as u32).collect() })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }
}

/// `c[f]` = number of nodes of residue `f`, for `f` in `0..e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ResidueContent(pub Vec<u32>);

impl ResidueContent {
    pub fn total(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }
}

pub fn residue(node: Node, params: &ResidueParams) -> u32 {
    let e = params.e as i64;
    (node.col as i64 - node.row as i64 + params.a[node.comp - 1] as i64).rem_euclid(e) as u32
}

pub fn content(lam: &MultiPartition, params: &ResidueParams) -> Result<ResidueContent> {
    check_r(lam, params)?;
    let mut c = vec![0u32; params.e as usize];
    for node in lam.nodes() {
        c[residue(node, params) as usize] += 1;
    }
    Ok(ResidueContent(c))
}

fn check_r(lam: &MultiPartition, params: &ResidueParams) -> Result<()> {
    if lam.r() != params.r() {
        return Err(Error::DimensionMismatch(format!(
            "{lam} has {} components but {} parameters were given",
            lam.r(),
            params.r()
        )));
    }
    Ok(())
}

fn weight_of_content(c: &ResidueContent, params: &ResidueParams) -> Result<i64> {
    let e = params.e as usize;
    let charged: i64 = params.a.iter().map(|&ak| c.0[ak as usize] as i64).sum();
    let squares: i64 = (0..e)
        .map(|f| {
            let d = c.0[f] as i64 - c.0[(f + 1) % e] as i64;
            d * d
        })
        .sum();
    if squares % 2 != 0 {
        return Err(Error::Internal(format!("odd square sum {squares} for content {:?}", c.0)));
    }
    Ok(charged - squares / 2)
}

/// `w(λ) = Σ_i c_{a_i}(λ) - ½ Σ_f (c_f(λ) - c_{f+1}(λ))²`.
pub fn weight(lam: &MultiPartition, params: &ResidueParams) -> Result<i64> {
    weight_of_content(&content(lam, params)?, params)
}

/// Parameters of the algebra with `q^{-1}` and the cyclotomic parameters
/// reversed, written as exponents of `q^{-1}`.
pub fn conjugate_params(params: &ResidueParams) -> ResidueParams {
    let e = params.e;
    ResidueParams { e, a: params.a.iter().rev().map(|&x| (e - x) % e).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockClass {
    pub content: ResidueContent,
    pub members: Vec<MultiPartition>,
    pub weight: i64,
}

impl BlockClass {
    /// Members sorted by dominance, largest first, if they form a chain.
    pub fn dominance_chain(&self) -> Option<Vec<MultiPartition>> {
        let mut sorted = self.members.clone();
        // Number of members each one dominates gives a linear extension.
        sorted.sort_by_key(|m| {
            std::cmp::Reverse(self.members.iter().filter(|o| dominates(m, o).unwrap_or(false)).count())
        });
        let total = sorted.windows(2).all(|w| dominates(&w[0], &w[1]).unwrap_or(false));
        total.then_some(sorted)
    }
}

/// Group all r-partitions of `n` by residue content.
///
/// Fails if two members of a class have different weights.
pub fn partition_into_blocks(n: usize, params: &ResidueParams) -> Result<Vec<BlockClass>> {
    let mut classes: BTreeMap<ResidueContent, Vec<MultiPartition>> = BTreeMap::new();
    for lam in enumerate_multipartitions(n, params.r()) {
        classes.entry(content(&lam, params)?).or_default().push(lam);
    }
    let mut blocks = Vec::with_capacity(classes.len());
    for (c, members) in classes {
        let w = weight_of_content(&c, params)?;
        for m in &members {
            let wm = weight(m, params)?;
            if wm != w {
                return Err(Error::violation(
                    "block weight invariance",
                    format!("{m} has weight {wm} but its block has weight {w}"),
                ));
            }
        }
        if w < 0 {
            log::warn!("negative weight {w} for content {:?}", c.0);
        }
        blocks.push(BlockClass { content: c, members, weight: w });
    }
    // Order blocks by their most dominant member, for stable output.
    blocks.sort_by(|x, y| y.members[0].cmp(&x.members[0]).then(x.content.cmp(&y.content)));
    Ok(blocks)
}

/// The block of `n`-nodes r-partitions with the given content, if any.
pub fn block_with_content(n: usize, params: &ResidueParams, c: &ResidueContent) -> Result<BlockClass> {
    partition_into_blocks(n, params)?
        .into_iter()
        .find(|b| &b.content == c)
        .ok_or_else(|| Error::Precondition(format!("no r-partition of {n} has content {:?}", c.0)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSets<T> {
    pub lambda0: Vec<T>,
    pub lambda1: Vec<T>,
    pub lambda2: Vec<T>,
    pub lambda3: Vec<T>,
    pub lambda4: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightOneReport {
    /// `λ_1 ◁ λ_2 ◁ ... ◁ λ_s`, least dominant first.
    pub chain: Vec<MultiPartition>,
    pub s: usize,
    pub n_lambda: Vec<u64>,
    pub lambda_sets: LambdaSets<MultiPartition>,
    /// `[W(λ_i) : L(λ_j)]`, an `s × (s-1)` matrix.
    pub decomposition: Vec<Vec<u32>>,
    /// `dim L(λ_i)` for `i < s`.
    pub dim_simple: Vec<u64>,
    /// `dim rad W(λ_i)` for all `i`.
    pub dim_rad_cell: Vec<u64>,
}

fn n_lambda_u64(lam: &MultiPartition) -> Result<u64> {
    let n: BigUint = lam.standard_tableaux_count();
    u64::try_from(&n).map_err(|_| Error::ResourceCap(format!("n_λ for {lam} does not fit in 64 bits")))
}

/// Combinatorial description of a weight-one block: its dominance chain, the
/// Λ-sets, the bidiagonal decomposition matrix and the dimensions it forces.
pub fn classify_weight_one(block: &BlockClass, params: &ResidueParams) -> Result<WeightOneReport> {
    if block.weight != 1 {
        return Err(Error::Precondition(format!("block {:?} has weight {}, not 1", block.content.0, block.weight)));
    }
    let mut chain = block.dominance_chain().ok_or_else(|| {
        Error::violation(
            "weight-one dominance chain",
            format!("members of block {:?} are not totally ordered by dominance", block.content.0),
        )
    })?;
    chain.reverse();
    let s = chain.len();
    if s > params.e() as usize {
        return Err(Error::violation("weight-one dominance chain", format!("chain length {s} exceeds e = {}", params.e())));
    }
    if s < 2 {
        return Err(Error::violation("weight-one dominance chain", "a weight-one block has at least two members"));
    }
    let n_lambda: Vec<u64> = chain.iter().map(n_lambda_u64).collect::<Result<_>>()?;

    let decomposition: Vec<Vec<u32>> =
        (0..s).map(|i| (0..s - 1).map(|j| u32::from(i == j || i == j + 1)).collect()).collect();

    // Unitriangular inversion: n_{λ_i} = dim L(λ_i) + dim L(λ_{i-1}).
    let mut dim_simple = Vec::with_capacity(s - 1);
    let mut prev = 0i64;
    for (i, &nl) in n_lambda.iter().take(s - 1).enumerate() {
        let d = nl as i64 - prev;
        if d <= 0 {
            return Err(Error::violation(
                "weight-one decomposition numbers",
                format!("dim L({}) would be {d}", chain[i]),
            ));
        }
        dim_simple.push(d as u64);
        prev = d;
    }
    if n_lambda[s - 1] as i64 != prev {
        return Err(Error::violation(
            "weight-one decomposition numbers",
            format!("n_λ of the top member {} is {} but dim L of its predecessor is {prev}", chain[s - 1], n_lambda[s - 1]),
        ));
    }
    let dim_rad_cell = (0..s).map(|i| if i == 0 { 0 } else { dim_simple[i - 1] }).collect();

    let lambda_sets = LambdaSets {
        lambda0: chain[..s - 1].to_vec(),
        lambda1: vec![chain[0].clone()],
        lambda2: chain[1..s - 1].to_vec(),
        lambda3: vec![chain[s - 1].clone()],
        lambda4: vec![chain[0].clone()],
    };
    Ok(WeightOneReport { chain, s, n_lambda, lambda_sets, decomposition, dim_simple, dim_rad_cell })
}

/// Per-member dimensions used by the paired sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberDims {
    pub shape: MultiPartition,
    pub n_lambda: u64,
    pub dim_rad: u64,
    pub dim_simple: u64,
    pub in_lambda2: bool,
    pub in_lambda3: bool,
    pub in_lambda4: bool,
}

impl MemberDims {
    pub fn from_report(report: &WeightOneReport) -> Vec<MemberDims> {
        let s = report.s;
        (0..s)
            .map(|i| MemberDims {
                shape: report.chain[i].clone(),
                n_lambda: report.n_lambda[i],
                dim_rad: report.dim_rad_cell[i],
                dim_simple: report.dim_simple.get(i).copied().unwrap_or(0),
                in_lambda2: i > 0 && i + 1 < s,
                in_lambda3: i + 1 == s,
                in_lambda4: i == 0,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairedSums {
    pub lambda3_sum: u64,
    pub lambda4_sum: u64,
    pub rad_sum: u64,
    pub simple_sum: u64,
}

impl PairedSums {
    pub fn over(members: &[MemberDims]) -> Self {
        let sq = |x: u64| x * x;
        Self {
            lambda3_sum: members.iter().filter(|m| m.in_lambda3).map(|m| sq(m.n_lambda)).sum(),
            lambda4_sum: members.iter().filter(|m| m.in_lambda4).map(|m| sq(m.n_lambda)).sum(),
            rad_sum: members.iter().filter(|m| m.in_lambda2).map(|m| sq(m.dim_rad)).sum(),
            simple_sum: members.iter().filter(|m| m.in_lambda2).map(|m| sq(m.dim_simple)).sum(),
        }
    }

    pub fn projective_sums_equal(&self) -> bool {
        self.lambda3_sum == self.lambda4_sum
    }

    pub fn radical_sums_equal(&self) -> bool {
        self.rad_sum == self.simple_sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairedSumsReport {
    pub mirror_params: ResidueParams,
    pub mirror_content: ResidueContent,
    /// The mirror block's chain, least dominant first.
    pub mirror_chain: Vec<MultiPartition>,
    pub mirror_is_conjugate_reversed: bool,
    pub sums: PairedSums,
}

impl PairedSumsReport {
    pub fn holds(&self) -> bool {
        self.mirror_is_conjugate_reversed && self.sums.projective_sums_equal() && self.sums.radical_sums_equal()
    }
}

/// Build the mirror block under conjugated parameters and check the paired
/// sum identities over the pair, using the combinatorial dimensions.
pub fn verify_paired_sums(block: &BlockClass, params: &ResidueParams) -> Result<PairedSumsReport> {
    let report = classify_weight_one(block, params)?;
    let mirror_params = conjugate_params(params);
    let n = block.members[0].size();
    let mirror_content = content(&block.members[0].conjugate(), &mirror_params)?;
    let mirror = block_with_content(n, &mirror_params, &mirror_content)?;
    if mirror.weight != 1 {
        return Err(Error::violation(
            "reversed-parameter conjugation",
            format!("mirror block {:?} has weight {}", mirror_content.0, mirror.weight),
        ));
    }
    let mirror_report = classify_weight_one(&mirror, &mirror_params)?;
    let expected: Vec<MultiPartition> = report.chain.iter().rev().map(MultiPartition::conjugate).collect();
    let mirror_is_conjugate_reversed = expected == mirror_report.chain;

    let mut members = MemberDims::from_report(&report);
    members.extend(MemberDims::from_report(&mirror_report));
    Ok(PairedSumsReport {
        mirror_params,
        mirror_content,
        mirror_chain: mirror_report.chain,
        mirror_is_conjugate_reversed,
        sums: PairedSums::over(&members),
    })
}
