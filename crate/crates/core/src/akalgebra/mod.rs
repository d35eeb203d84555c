//! Explicit Ariki-Koike algebras over F_p and the cellular, symmetric and
//! block data needed to check weight-one block statements on them.
//!
//! Pipeline: [`AlgebraTable`] (normal-form multiplication) → [`CellDatum`]
//! (DJM cellular basis) → [`DualBasisTable`] (trace form and dual basis) →
//! [`GramData`] (Φ, Ψ, k_λ) → [`ModuleData`] (cell modules, simples, radical)
//! → [`CenterData`] (block idempotents) → [`BlockVerdict`].

mod cellular;
mod center;
mod dual;
mod gram;
mod modules;
pub mod perm;
mod table;
mod verdict;

use serde::Serialize;

use crate::blocks::{conjugate_params, ResidueParams};
use crate::error::{Error, Result};
use crate::ffield::FieldContext;

pub use cellular::{check_cellularity, djm_basis, Cell, CellDatum, CellularityReport};
pub use center::{center_and_blocks, BlockIdempotent, CenterData};
pub use dual::{duality_violation, trace_and_dual, DualBasisTable};
pub use gram::{gram_matrices, k_lambda, lambda_sets, quasi_idempotent_failures, GramData, LambdaGram, LambdaSetIndices};
pub use modules::{cell_and_simple_modules, nilpotency_index, radical, ModuleData};
pub use table::{build_algebra, AlgebraTable, RelationCheck, DEFAULT_DIMENSION_CAP};
pub use verdict::{
    assess_weight_one_block, radical_powers, socle_and_central_ideals, verify_weight_one_block, AlgebraData,
    BlockSummary, BlockVerdict, CellSummary, CentralIdeals, CheckOutcome, Fault, MirrorSummary, RadicalPowers,
    VerifyOptions,
};

/// Parameters of `H_n(q, Q)` with `Q_k = q^{a_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AKParams {
    ctx: FieldContext,
    a: Vec<u32>,
    n: usize,
}

#[derive(Serialize)]
struct AKParamsWire<'a> {
    p: u32,
    q: u32,
    e: u32,
    r: usize,
    a: &'a [u32],
    n: usize,
}

impl Serialize for AKParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AKParamsWire { p: self.ctx.p(), q: self.ctx.q(), e: self.ctx.e(), r: self.r(), a: &self.a, n: self.n }
            .serialize(s)
    }
}

impl AKParams {
    /// Exponents `a` are reduced modulo `e`.
    pub fn new(ctx: FieldContext, a: &[i64], n: usize) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidParameter(format!("need r ≥ 2 cyclotomic parameters, got {}", a.len())));
        }
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let e = ctx.e() as i64;
        Ok(Self { ctx, a: a.iter().map(|&x| x.rem_euclid(e) as u32).collect(), n })
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Q_k = q^{a_k}` as field residues.
    pub fn cyclotomic(&self) -> Vec<u32> {
        self.a.iter().map(|&x| self.ctx.q_pow(x as i64)).collect()
    }

    pub fn residue_params(&self) -> ResidueParams {
        let a: Vec<i64> = self.a.iter().map(|&x| x as i64).collect();
        ResidueParams::new(self.ctx.e(), &a).expect("e ≥ 2 and r ≥ 2")
    }

    /// Parameters `q^{-1}, Q_r, ..., Q_1`, with exponents taken relative to `q^{-1}`.
    pub fn mirror(&self) -> AKParams {
        let conj = conjugate_params(&self.residue_params());
        Self { ctx: self.ctx.inverted(), a: conj.a().to_vec(), n: self.n }
    }

    /// `r^n · n!`, or `None` on overflow.
    pub fn dimension(&self) -> Option<usize> {
        let mut d: usize = 1;
        for k in 1..=self.n {
            d = d.checked_mul(self.r())?.checked_mul(k)?;
        }
        Some(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_reverses_cyclotomic_parameters() {
        let ctx = FieldContext::new(7, 2).unwrap();
        let p = AKParams::new(ctx, &[0, 1], 2).unwrap();
        let m = p.mirror();
        assert_eq!(m.ctx().q(), 4);
        assert_eq!(m.a(), &[2, 0]);
        let mut rev = p.cyclotomic();
        rev.reverse();
        assert_eq!(m.cyclotomic(), rev);
        assert_eq!(p.dimension(), Some(8));
    }

    #[test]
    fn rejects_degenerate_parameters() {
        let ctx = FieldContext::new(7, 2).unwrap();
        assert!(AKParams::new(ctx, &[0], 2).is_err());
        assert!(AKParams::new(ctx, &[0, 1], 0).is_err());
    }
}
