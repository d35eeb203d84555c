//! The center of the algebra and its central primitive idempotents, each
//! labelled by the residue content of the cell modules it fixes.

use serde::Serialize;

use crate::blocks::{content, ResidueContent};
use crate::error::{Error, Result};
use crate::linalg::{split_idempotents, Matrix, StructureAlgebra, Subspace};

use super::cellular::CellDatum;
use super::modules::ModuleData;
use super::table::AlgebraTable;

#[derive(Debug, Clone, Serialize)]
pub struct BlockIdempotent {
    pub content: ResidueContent,
    /// Cell indices on which the idempotent acts as the identity.
    pub cells: Vec<usize>,
    #[serde(skip)]
    pub idempotent: Vec<u32>,
    /// `dim z_B A`.
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct CenterData {
    pub center: Subspace,
    pub blocks: Vec<BlockIdempotent>,
}

impl CenterData {
    pub fn block_with_content(&self, c: &ResidueContent) -> Option<&BlockIdempotent> {
        self.blocks.iter().find(|b| &b.content == c)
    }
}

/// `Z(A) = {z : z T_g = T_g z}`, split into central primitive idempotents.
pub fn center_and_blocks(table: &AlgebraTable, cd: &CellDatum, modules: &ModuleData) -> Result<CenterData> {
    let f = table.field();
    let dim = table.dim();
    let n = table.params().n();
    let mut m = Matrix::zeros(f, dim, dim * n);
    for j in 0..dim {
        let b = table.basis_vector(j);
        for g in 0..n {
            let r = table.right_gen(g, &b);
            let l = table.left_gen(g, &b);
            for k in 0..dim {
                m.set(j, g * dim + k, f.sub(r[k], l[k]));
            }
        }
    }
    let center = m.left_kernel();
    let zb = center.basis().to_vec();
    let zdim = zb.len();
    let mut structure = vec![vec![Vec::new(); zdim]; zdim];
    for a in 0..zdim {
        let prods = table.right_products(&zb[a]);
        for b in 0..zdim {
            let mut v = vec![0u32; dim];
            for (j, &c) in zb[b].iter().enumerate() {
                if c != 0 {
                    crate::linalg::axpy(f, &mut v, c, &prods[j]);
                }
            }
            structure[a][b] = center
                .coordinates(&v)
                .ok_or_else(|| Error::Internal("the center is not closed under multiplication".into()))?;
        }
    }
    let unit = center.coordinates(&table.one()).ok_or_else(|| Error::Internal("1 is not central".into()))?;
    let zalg = StructureAlgebra::new(f, unit, structure)?;
    let idems = split_idempotents(&zalg)?;

    let rparams = table.params().residue_params();
    let mut blocks = Vec::with_capacity(idems.len());
    for coords in idems {
        let z = crate::linalg::combine(f, dim, &zb, &coords);
        let mut cells = Vec::new();
        for ci in 0..cd.cells.len() {
            let rho = modules.act(ci, &z);
            let size = rho.rows();
            if rho == Matrix::identity(f, size) {
                cells.push(ci);
            } else if !rho.is_zero() {
                return Err(Error::Internal(format!(
                    "a central idempotent acts on W({}) by neither 0 nor 1",
                    cd.cells[ci].shape
                )));
            }
        }
        let first = cells.first().ok_or_else(|| Error::Internal("a block idempotent kills every cell module".into()))?;
        let c = content(&cd.cells[*first].shape, &rparams)?;
        for &ci in &cells {
            if content(&cd.cells[ci].shape, &rparams)? != c {
                return Err(Error::violation(
                    "blocks are residue-content classes",
                    format!("{} and {} share a block but not a content", cd.cells[*first].shape, cd.cells[ci].shape),
                ));
            }
        }
        let span = Subspace::span(f, dim, table.right_products(&z));
        blocks.push(BlockIdempotent { content: c, cells, idempotent: z, dim: span.dim() });
    }
    blocks.sort_by(|a, b| a.content.cmp(&b.content));
    if blocks.windows(2).any(|w| w[0].content == w[1].content) {
        return Err(Error::violation("blocks are residue-content classes", "two blocks carry the same content"));
    }
    Ok(CenterData { center, blocks })
}
