//! The coefficient-of-identity trace and the basis dual to the cellular basis.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::cellular::CellDatum;
use super::table::AlgebraTable;

#[derive(Debug, Clone)]
pub struct DualBasisTable {
    /// `τ(b_i b_j)` over the normal-form basis.
    pub trace_gram: Matrix,
    /// `D_UV` in normal-form coordinates, at the global index of `C_UV`.
    pub basis: Vec<Vec<u32>>,
    coords: Matrix,
}

impl DualBasisTable {
    /// Coordinates of a normal-form vector in the dual basis.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.coords.vec_mul(v)
    }

    /// `τ` as a coefficient vector: `τ(x) = Σ_j τ_j x_j`.
    pub fn trace_vector(&self) -> Vec<u32> {
        crate::linalg::unit(self.basis.len(), 0)
    }
}

/// Builds `τ(b_i b_j)`, checks symmetry, nondegeneracy and `τ(a) = τ(a*)`,
/// and solves `τ(C_ST D_UV) = δ_{SV} δ_{TU}` (zero across different λ).
pub fn trace_and_dual(table: &AlgebraTable, cd: &CellDatum) -> Result<DualBasisTable> {
    let f = table.field();
    let dim = table.dim();
    let mut gram = Matrix::zeros(f, dim, dim);
    for i in 0..dim {
        let prods = table.right_products(&table.basis_vector(i));
        for (j, p) in prods.iter().enumerate() {
            gram.set(i, j, table.trace(p));
        }
    }
    if table.trace(&table.one()) != 1 {
        return Err(Error::InvalidTrace("τ(1) ≠ 1".into()));
    }
    for i in 0..dim {
        for j in 0..i {
            if gram.get(i, j) != gram.get(j, i) {
                return Err(Error::InvalidTrace(format!("τ(b{i} b{j}) ≠ τ(b{j} b{i})")));
            }
        }
        if table.trace(&table.star(&table.basis_vector(i))) != table.trace(&table.basis_vector(i)) {
            return Err(Error::InvalidTrace(format!("τ(b{i}) ≠ τ(b{i}*)")));
        }
    }
    if gram.rank() != dim {
        return Err(Error::InvalidTrace("the trace form is degenerate".into()));
    }

    let c = Matrix::from_rows(f, dim, &cd.basis)?;
    // C G D^T = P, where P pairs (λ,S,T) with (λ,T,S); so D_UV is column (λ,V,U) of (C G)^{-1}.
    let x = c.mul(&gram)?.inverse()?;
    let xt = x.transpose();
    let mut basis = vec![Vec::new(); dim];
    for cell in &cd.cells {
        for u in 0..cell.size() {
            for v in 0..cell.size() {
                basis[cell.index(u, v)] = xt.row(cell.index(v, u)).to_vec();
            }
        }
    }
    let coords = Matrix::from_rows(f, dim, &basis)?.inverse()?;
    Ok(DualBasisTable { trace_gram: gram, basis, coords })
}

/// `τ(C_ST D_UV)` for every pair, through actual products. Returns the
/// first index pair breaking the δ-pattern.
pub fn duality_violation(table: &AlgebraTable, cd: &CellDatum, dual: &DualBasisTable) -> Option<(usize, usize)> {
    for (i, ci) in cd.basis.iter().enumerate() {
        let prods = table.right_products(ci);
        let (lam, s, t) = cd.owner(i);
        for (j, dj) in dual.basis.iter().enumerate() {
            let (mu, u, v) = cd.owner(j);
            let value = dj
                .iter()
                .zip(&prods)
                .fold(0u32, |acc, (&c, p)| table.field().mul_add(acc, c, table.trace(p)));
            let expected = u32::from(lam == mu && s == v && t == u);
            if value != expected {
                return Some((i, j));
            }
        }
    }
    None
}
