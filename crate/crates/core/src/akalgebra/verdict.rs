//! End-to-end verification of a weight-one block on the explicit algebra.
//!
//! The nilpotent ideal whose equality with `rad B` is the headline statement
//! is not constructed; instead every checkable hypothesis and consequence is
//! computed on the algebra and its mirror (parameters `q^{-1}, Q_r, ..., Q_1`).

use serde::Serialize;

use crate::blocks::{block_with_content, classify_weight_one, content, BlockClass, LambdaSets, MemberDims, PairedSums, ResidueContent, WeightOneReport};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::partitions::MultiPartition;

use super::cellular::{check_cellularity, djm_basis, CellDatum, CellularityReport};
use super::center::{center_and_blocks, BlockIdempotent, CenterData};
use super::dual::{duality_violation, trace_and_dual, DualBasisTable};
use super::gram::{gram_matrices, lambda_sets, quasi_idempotent_failures, GramData, LambdaSetIndices};
use super::modules::{cell_and_simple_modules, product_span, radical, ModuleData};
use super::table::{AlgebraTable, DEFAULT_DIMENSION_CAP};
use super::AKParams;

/// Deliberate corruption used to exercise failure reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Shift one entry of the first Gram matrix after everything is computed.
    GramEntry,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub cap: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_DIMENSION_CAP, fault: None }
    }
}

/// Everything computed from one algebra.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub table: AlgebraTable,
    pub cells: CellDatum,
    pub cellularity: CellularityReport,
    pub dual: DualBasisTable,
    pub gram: GramData,
    pub modules: ModuleData,
    pub center: CenterData,
    pub radical: Subspace,
}

impl AlgebraData {
    pub fn compute(params: &AKParams, opts: &VerifyOptions) -> Result<Self> {
        let table = AlgebraTable::build(params, opts.cap)?;
        let cells = djm_basis(&table)?;
        let cellularity = check_cellularity(&table, &cells);
        if !cellularity.holds {
            return Err(Error::Internal(format!(
                "the DJM basis failed the cellularity check: {}",
                cellularity.witness.clone().unwrap_or_default()
            )));
        }
        let dual = trace_and_dual(&table, &cells)?;
        let mut gram = gram_matrices(&table, &cells, &dual)?;
        let modules = cell_and_simple_modules(&table, &cellularity, &gram)?;
        let center = center_and_blocks(&table, &cells, &modules)?;
        let radical = radical(&table, &modules, &gram)?;
        if opts.fault == Some(Fault::GramEntry) {
            gram.corrupt_first_entry();
        }
        Ok(Self { table, cells, cellularity, dual, gram, modules, center, radical })
    }

    fn shape(&self, ci: usize) -> &MultiPartition {
        &self.cells.cells[ci].shape
    }

    fn cells_of(&self, shapes: &[MultiPartition]) -> Result<Vec<usize>> {
        shapes
            .iter()
            .map(|s| self.cells.cell_of(s).ok_or_else(|| Error::Internal(format!("no cell for {s}"))))
            .collect()
    }

    fn block(&self, c: &ResidueContent) -> Result<&BlockIdempotent> {
        self.center
            .block_with_content(c)
            .ok_or_else(|| Error::Internal(format!("no central idempotent carries content {:?}", c.0)))
    }
}

/// `rad B = z_B rad A` and its square and cube.
#[derive(Debug, Clone)]
pub struct RadicalPowers {
    pub rad: Subspace,
    pub square: Subspace,
    pub cube: Subspace,
}

pub fn radical_powers(table: &AlgebraTable, rad_a: &Subspace, z_b: &[u32]) -> RadicalPowers {
    let gens: Vec<Vec<u32>> = rad_a.basis().iter().map(|x| table.mul(z_b, x)).collect();
    let rad = Subspace::span(table.field(), table.dim(), gens);
    let square = product_span(table, rad.basis(), rad.basis());
    let cube = product_span(table, square.basis(), rad.basis());
    RadicalPowers { rad, square, cube }
}

/// Socle, Reynolds ideal `R(B) = Z(B) ∩ soc B` and `L(B)`, the ideal of `Z(B)`
/// generated by the projected elements `z_B e_λ`.
#[derive(Debug, Clone, Serialize)]
pub struct CentralIdeals {
    pub dim_center: usize,
    pub dim_socle: usize,
    pub dim_reynolds: usize,
    pub dim_l: usize,
    /// `dim` of the variant using only the `e_λ` with `λ` in the block.
    pub dim_l_block_cells: usize,
    pub e_lambda_independent_of_t: bool,
    pub e_lambda_central: bool,
    pub l_equals_r: bool,
    #[serde(skip)]
    pub socle: Subspace,
    #[serde(skip)]
    pub reynolds: Subspace,
    #[serde(skip)]
    pub l: Subspace,
}

/// `e_λ(T) = Σ_S C_ST D_TS` for every `T`.
fn e_lambda(data: &AlgebraData, ci: usize) -> Vec<Vec<u32>> {
    let f = data.table.field();
    let cell = &data.cells.cells[ci];
    (0..cell.size())
        .map(|t| {
            let mut acc = vec![0u32; data.table.dim()];
            for s in 0..cell.size() {
                let prod = data.table.mul(&data.cells.basis[cell.index(s, t)], &data.dual.basis[cell.index(t, s)]);
                crate::linalg::axpy(f, &mut acc, 1, &prod);
            }
            acc
        })
        .collect()
}

fn is_central(table: &AlgebraTable, x: &[u32]) -> bool {
    (0..table.params().n()).all(|g| table.right_gen(g, x) == table.left_gen(g, x))
}

pub fn socle_and_central_ideals(data: &AlgebraData, block: &BlockIdempotent, rad_b: &Subspace) -> Result<CentralIdeals> {
    let t = &data.table;
    let f = t.field();
    let dim = t.dim();
    let z_b = &block.idempotent;
    let b_space = Subspace::span(f, dim, t.right_products(z_b));
    let b_basis = b_space.basis();

    // soc B = {x ∈ B : x · rad B = 0}
    let width = (rad_b.dim() * dim).max(1);
    let mut m = Matrix::zeros(f, b_basis.len(), width);
    for (i, x) in b_basis.iter().enumerate() {
        let prods = t.right_products(x);
        for (k, y) in rad_b.basis().iter().enumerate() {
            let mut v = vec![0u32; dim];
            for (j, &c) in y.iter().enumerate() {
                if c != 0 {
                    crate::linalg::axpy(f, &mut v, c, &prods[j]);
                }
            }
            for (c, &val) in v.iter().enumerate() {
                m.set(i, k * dim + c, val);
            }
        }
    }
    let coeffs = m.left_kernel();
    let socle = Subspace::span(
        f,
        dim,
        coeffs.basis().iter().map(|c| crate::linalg::combine(f, dim, b_basis, c)).collect(),
    );

    let center_b = Subspace::span(f, dim, data.center.center.basis().iter().map(|z| t.mul(z_b, z)).collect());
    let reynolds = center_b.intersect(&socle)?;

    let mut independent = true;
    let mut central = true;
    let mut gens_all = Vec::new();
    let mut gens_block = Vec::new();
    for ci in 0..data.cells.cells.len() {
        let es = e_lambda(data, ci);
        if es.windows(2).any(|w| w[0] != w[1]) {
            independent = false;
        }
        for e in es {
            if !is_central(t, &e) {
                central = false;
            }
            if block.cells.contains(&ci) {
                gens_block.push(e.clone());
            }
            gens_all.push(e);
        }
    }
    let l = product_span(t, center_b.basis(), &gens_all);
    let l_block = product_span(t, center_b.basis(), &gens_block);
    Ok(CentralIdeals {
        dim_center: center_b.dim(),
        dim_socle: socle.dim(),
        dim_reynolds: reynolds.dim(),
        dim_l: l.dim(),
        dim_l_block_cells: l_block.dim(),
        e_lambda_independent_of_t: independent,
        e_lambda_central: central,
        l_equals_r: l == reynolds,
        socle,
        reynolds,
        l,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

fn check(statement: &str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { statement: statement.into(), passed, detail: detail.into() }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub shape: MultiPartition,
    pub n_lambda: usize,
    pub gram_rank: usize,
    pub dual_gram_rank: usize,
    pub dim_rad: usize,
    pub k: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockSummary {
    pub content: Vec<u32>,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MirrorSummary {
    pub params: AKParams,
    pub content: Vec<u32>,
    pub chain: Vec<MultiPartition>,
    pub lambda_sets: LambdaSets<MultiPartition>,
    pub cells: Vec<CellSummary>,
    pub dim_block: usize,
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, Serialize)]
pub struct BlockVerdict {
    pub params: AKParams,
    pub content: Vec<u32>,
    /// Least dominant first.
    pub chain: Vec<MultiPartition>,
    pub s: usize,
    pub dim_H: usize,
    pub blocks: Vec<BlockSummary>,
    pub dim_B: usize,
    pub n_lambda: Vec<usize>,
    pub dim_L: Vec<usize>,
    pub cells: Vec<CellSummary>,
    pub lambda_sets: LambdaSets<MultiPartition>,
    pub dim_radB: usize,
    pub radB_square_dim: usize,
    pub radB_cube_dim: usize,
    pub central_ideals: CentralIdeals,
    pub mirror: MirrorSummary,
    pub paired_sums: PairedSums,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

impl BlockVerdict {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn names(data: &AlgebraData, idx: &[usize]) -> Vec<MultiPartition> {
    idx.iter().map(|&i| data.shape(i).clone()).collect()
}

fn algebraic_sets(data: &AlgebraData, block_cells: &[usize]) -> LambdaSets<MultiPartition> {
    let sets: LambdaSetIndices = lambda_sets(&data.gram).restricted(block_cells);
    LambdaSets {
        lambda0: names(data, &sets.lambda0),
        lambda1: names(data, &sets.lambda1),
        lambda2: names(data, &sets.lambda2),
        lambda3: names(data, &sets.lambda3),
        lambda4: names(data, &sets.lambda4),
    }
}

/// Λ-sets as sorted shape lists, so that set equality is list equality.
fn sorted(sets: &LambdaSets<MultiPartition>) -> LambdaSets<MultiPartition> {
    let s = |v: &Vec<MultiPartition>| {
        let mut v = v.clone();
        v.sort();
        v
    };
    LambdaSets {
        lambda0: s(&sets.lambda0),
        lambda1: s(&sets.lambda1),
        lambda2: s(&sets.lambda2),
        lambda3: s(&sets.lambda3),
        lambda4: s(&sets.lambda4),
    }
}

fn cell_summaries(data: &AlgebraData, idx: &[usize]) -> Vec<CellSummary> {
    idx.iter()
        .map(|&ci| {
            let g = &data.gram.cells[ci];
            CellSummary {
                shape: g.shape.clone(),
                n_lambda: g.size(),
                gram_rank: g.rank,
                dual_gram_rank: g.psi.rank(),
                dim_rad: g.size() - g.rank,
                k: g.k,
            }
        })
        .collect()
}

/// Member dimensions taken from the algebra, classified by its own Λ-sets.
fn algebraic_members(data: &AlgebraData, idx: &[usize]) -> Vec<MemberDims> {
    let sets = lambda_sets(&data.gram);
    idx.iter()
        .map(|&ci| {
            let g = &data.gram.cells[ci];
            MemberDims {
                shape: g.shape.clone(),
                n_lambda: g.size() as u64,
                dim_rad: (g.size() - g.rank) as u64,
                dim_simple: g.rank as u64,
                in_lambda2: sets.lambda2.contains(&ci),
                in_lambda3: sets.lambda3.contains(&ci),
                in_lambda4: sets.lambda4.contains(&ci),
            }
        })
        .collect()
}

fn same_set(mut a: Vec<usize>, mut b: Vec<usize>) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn fmt_sets(s: &LambdaSets<MultiPartition>) -> String {
    let j = |v: &Vec<MultiPartition>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    format!(
        "Λ0 {{{}}} Λ1 {{{}}} Λ2 {{{}}} Λ3 {{{}}} Λ4 {{{}}}",
        j(&s.lambda0),
        j(&s.lambda1),
        j(&s.lambda2),
        j(&s.lambda3),
        j(&s.lambda4)
    )
}

fn weight_one_class(params: &AKParams, c: &ResidueContent) -> Result<(BlockClass, WeightOneReport)> {
    let rp = params.residue_params();
    let block = block_with_content(params.n(), &rp, c)?;
    let report = classify_weight_one(&block, &rp)?;
    Ok((block, report))
}

/// Structural identities of the whole algebra that every later check relies on.
fn structural_checks(data: &AlgebraData) -> Vec<CheckOutcome> {
    let shapes = |v: Vec<usize>| v.iter().map(|&i| data.shape(i).to_string()).collect::<Vec<_>>().join(" ");
    let gram_fail = data.gram.product_identity_failures();
    let quasi = quasi_idempotent_failures(&data.table, &data.cells, &data.dual, &data.gram);
    let duality = duality_violation(&data.table, &data.cells, &data.dual);
    vec![
        check(
            "Gram product identity G(λ)G'(λ) = k_λ E",
            gram_fail.is_empty(),
            if gram_fail.is_empty() { "holds on every cell".to_string() } else { format!("fails on {}", shapes(gram_fail)) },
        ),
        check(
            "quasi-idempotent identity (C_SS D_SS)² = k_λ C_SS D_SS",
            quasi.is_empty(),
            if quasi.is_empty() { "holds on every cell".to_string() } else { format!("fails on {}", shapes(quasi)) },
        ),
        check(
            "dual basis duality τ(C_ST D_UV) = δ",
            duality.is_none(),
            match duality {
                None => "full δ-pattern".to_string(),
                Some((i, j)) => format!("breaks at cellular index {i}, dual index {j}"),
            },
        ),
    ]
}

/// Run every check on the block with content `c`. Violations are recorded in
/// the verdict; errors are reserved for bad input, caps and internal faults.
pub fn assess_weight_one_block(params: &AKParams, c: &ResidueContent, opts: &VerifyOptions) -> Result<BlockVerdict> {
    let rp = params.residue_params();
    let block = block_with_content(params.n(), &rp, c)?;
    if block.weight != 1 {
        return Err(Error::Precondition(format!("block {:?} has weight {}, not 1", c.0, block.weight)));
    }
    let report = classify_weight_one(&block, &rp)?;
    let data = AlgebraData::compute(params, opts)?;
    let s = report.s;
    let mut checks = structural_checks(&data);

    // (i) chain and block membership
    let chain_cells = data.cells_of(&report.chain)?;
    let zb = data.block(c)?;
    checks.push(check(
        "weight-one dominance chain",
        s <= params.ctx().e() as usize && same_set(zb.cells.clone(), chain_cells.clone()),
        format!(
            "s = {s}, e = {}; the central idempotent fixes {} cells, the chain has {}",
            params.ctx().e(),
            zb.cells.len(),
            chain_cells.len()
        ),
    ));

    // (ii) Λ-sets
    let sets = algebraic_sets(&data, &chain_cells);
    let predicted = &report.lambda_sets;
    checks.push(check(
        "weight-one Λ-sets",
        sorted(&sets) == sorted(predicted),
        format!("algebra: {}; predicted: {}", fmt_sets(&sets), fmt_sets(predicted)),
    ));

    // (iii) dimensions of simples and cell radicals along the chain
    let ranks: Vec<usize> = chain_cells.iter().map(|&ci| data.gram.cells[ci].rank).collect();
    let rads: Vec<usize> = chain_cells.iter().map(|&ci| data.gram.cells[ci].size() - data.gram.cells[ci].rank).collect();
    let want_l: Vec<usize> = (0..s).map(|i| report.dim_simple.get(i).copied().unwrap_or(0) as usize).collect();
    let want_rad: Vec<usize> = report.dim_rad_cell.iter().map(|&x| x as usize).collect();
    checks.push(check(
        "weight-one decomposition dimensions",
        ranks == want_l && rads == want_rad,
        format!("dim L {ranks:?} (predicted {want_l:?}), dim rad W {rads:?} (predicted {want_rad:?})"),
    ));

    // (iv)
    let ks: Vec<u32> = chain_cells.iter().map(|&ci| data.gram.cells[ci].k).collect();
    checks.push(check("k_λ vanishes on a weight-one block", ks.iter().all(|&k| k == 0), format!("k = {ks:?}")));

    // (v)
    let powers = radical_powers(&data.table, &data.radical, &zb.idempotent);
    let semisimple: usize = ranks.iter().map(|r| r * r).sum();
    checks.push(check(
        "block radical dimension",
        powers.rad.dim() + semisimple == zb.dim,
        format!("dim rad B = {}, dim B = {}, Σ (dim L)² = {semisimple}", powers.rad.dim(), zb.dim),
    ));
    checks.push(check(
        "cube of the block radical vanishes",
        powers.cube.is_zero(),
        format!("dim (rad B)³ = {}", powers.cube.dim()),
    ));
    let square_ok = if s > 2 { !powers.square.is_zero() } else { powers.square.is_zero() };
    let witness = chain_cells.iter().find(|&&ci| {
        let g = &data.gram.cells[ci];
        g.k == 0 && g.rank > 0 && !g.psi.is_zero()
    });
    checks.push(check(
        "square of the block radical is nonzero exactly when s > 2",
        square_ok,
        format!(
            "s = {s}, dim (rad B)² = {}; cell with k = 0, Φ ≠ 0, Ψ ≠ 0: {}",
            powers.square.dim(),
            witness.map(|&ci| data.shape(ci).to_string()).unwrap_or_else(|| "none".into())
        ),
    ));

    // (vi) the mirror block and the paired sums
    let mparams = params.mirror();
    let mrp = mparams.residue_params();
    let mcontent = content(&report.chain[0].conjugate(), &mrp)?;
    let (mblock, mreport) = weight_one_class(&mparams, &mcontent)?;
    let mdata = AlgebraData::compute(&mparams, &VerifyOptions { fault: None, ..*opts })?;
    let mzb = mdata.block(&mcontent)?;
    let expected_chain: Vec<MultiPartition> = report.chain.iter().rev().map(MultiPartition::conjugate).collect();
    let mchain_cells = mdata.cells_of(&mreport.chain)?;
    checks.push(check(
        "mirror block is the reversed conjugate chain",
        mblock.weight == 1 && mreport.chain == expected_chain && same_set(mzb.cells.clone(), mchain_cells.clone()),
        format!(
            "mirror content {:?}, weight {}, chain {}",
            mcontent.0,
            mblock.weight,
            mreport.chain.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ◁ ")
        ),
    ));
    let msets = algebraic_sets(&mdata, &mchain_cells);
    checks.push(check(
        "mirror block Λ-sets",
        sorted(&msets) == sorted(&mreport.lambda_sets),
        format!("algebra: {}; predicted: {}", fmt_sets(&msets), fmt_sets(&mreport.lambda_sets)),
    ));
    let mut members = algebraic_members(&data, &chain_cells);
    members.extend(algebraic_members(&mdata, &mchain_cells));
    let sums = PairedSums::over(&members);
    checks.push(check(
        "paired projective sums over Λ3 and Λ4",
        sums.projective_sums_equal(),
        format!("Σ_Λ3 n² = {}, Σ_Λ4 n² = {}", sums.lambda3_sum, sums.lambda4_sum),
    ));
    checks.push(check(
        "paired radical sums over Λ2",
        sums.radical_sums_equal(),
        format!("Σ (dim rad λ)² = {}, Σ (dim L)² = {}", sums.rad_sum, sums.simple_sum),
    ));

    // (vii)
    let central = socle_and_central_ideals(&data, zb, &powers.rad)?;
    checks.push(check(
        "central ideals L(B) = R(B)",
        central.l_equals_r,
        format!(
            "dim Z(B) = {}, dim soc B = {}, dim R(B) = {}, dim L(B) = {}; e_λ independent of T: {}, central: {}",
            central.dim_center,
            central.dim_socle,
            central.dim_reynolds,
            central.dim_l,
            central.e_lambda_independent_of_t,
            central.e_lambda_central
        ),
    ));

    let all_passed = checks.iter().all(|c| c.passed);
    let mut blocks: Vec<BlockSummary> =
        data.center.blocks.iter().map(|b| BlockSummary { content: b.content.0.clone(), dim: b.dim }).collect();
    blocks.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.content.cmp(&b.content)));
    Ok(BlockVerdict {
        params: params.clone(),
        content: c.0.clone(),
        chain: report.chain.clone(),
        s,
        dim_H: data.table.dim(),
        blocks,
        dim_B: zb.dim,
        n_lambda: report.n_lambda.iter().map(|&x| x as usize).collect(),
        dim_L: ranks[..s - 1].to_vec(),
        cells: cell_summaries(&data, &chain_cells),
        lambda_sets: sets,
        dim_radB: powers.rad.dim(),
        radB_square_dim: powers.square.dim(),
        radB_cube_dim: powers.cube.dim(),
        central_ideals: central,
        mirror: MirrorSummary {
            params: mparams,
            content: mcontent.0.clone(),
            chain: mreport.chain.clone(),
            lambda_sets: msets,
            cells: cell_summaries(&mdata, &mchain_cells),
            dim_block: mzb.dim,
        },
        paired_sums: sums,
        checks,
        all_passed,
    })
}

/// As [`assess_weight_one_block`], but any failed check becomes an error
/// naming the first failing statement.
pub fn verify_weight_one_block(params: &AKParams, c: &ResidueContent, opts: &VerifyOptions) -> Result<BlockVerdict> {
    let verdict = assess_weight_one_block(params, c, opts)?;
    if let Some(bad) = verdict.failures().next() {
        return Err(Error::violation(bad.statement.clone(), bad.detail.clone()));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldContext;

    fn params(p: u32, q: i64, a: &[i64], n: usize) -> AKParams {
        AKParams::new(FieldContext::new(p, q).unwrap(), a, n).unwrap()
    }

    #[test]
    fn instance_with_three_member_chain() {
        let v = verify_weight_one_block(&params(7, 2, &[0, 1], 2), &ResidueContent(vec![1, 1, 0]), &VerifyOptions::default()).unwrap();
        assert_eq!(v.dim_H, 8);
        assert_eq!(v.blocks.iter().map(|b| b.dim).collect::<Vec<_>>(), vec![6, 1, 1]);
        assert_eq!(v.dim_B, 6);
        assert_eq!(v.n_lambda, vec![1, 2, 1]);
        assert_eq!(v.dim_L, vec![1, 1]);
        assert_eq!(v.dim_radB, 4);
        assert!(v.radB_square_dim > 0);
        assert_eq!(v.radB_cube_dim, 0);
        assert!(v.central_ideals.l_equals_r);
        assert_eq!(v.mirror.params.ctx().q(), 4);
        assert_eq!(v.mirror.params.a(), &[2, 0]);
    }

    #[test]
    fn two_dimensional_local_block() {
        let v = verify_weight_one_block(&params(5, 4, &[0, 0], 1), &ResidueContent(vec![1, 0]), &VerifyOptions::default()).unwrap();
        assert_eq!(v.s, 2);
        assert_eq!(v.dim_radB, 1);
        assert_eq!(v.radB_square_dim, 0);
        assert_eq!(v.central_ideals.dim_socle, 1);
        assert!(v.central_ideals.l_equals_r);
    }

    #[test]
    fn weight_zero_block_is_a_precondition_error() {
        let err = verify_weight_one_block(&params(7, 2, &[0, 1], 2), &ResidueContent(vec![0, 1, 1]), &VerifyOptions::default());
        assert!(matches!(err, Err(Error::Precondition(_))), "{err:?}");
    }

    #[test]
    fn injected_gram_fault_names_the_gram_identity() {
        let opts = VerifyOptions { fault: Some(Fault::GramEntry), ..Default::default() };
        let v = assess_weight_one_block(&params(7, 2, &[0, 1], 2), &ResidueContent(vec![1, 1, 0]), &opts).unwrap();
        assert!(!v.all_passed);
        let first = v.failures().next().unwrap();
        assert!(first.statement.starts_with("Gram product identity"));
    }

    #[test]
    fn radical_powers_of_simple_block_vanish() {
        let data = AlgebraData::compute(&params(7, 2, &[0, 1], 2), &VerifyOptions::default()).unwrap();
        let b = data.center.block_with_content(&ResidueContent(vec![0, 1, 1])).unwrap();
        let rp = radical_powers(&data.table, &data.radical, &b.idempotent);
        assert_eq!((rp.rad.dim(), rp.square.dim(), rp.cube.dim()), (0, 0, 0));
        let ci = socle_and_central_ideals(&data, b, &rp.rad).unwrap();
        assert_eq!((ci.dim_center, ci.dim_reynolds, ci.dim_l), (1, 1, 1));
        assert!(ci.l_equals_r);
    }
}
