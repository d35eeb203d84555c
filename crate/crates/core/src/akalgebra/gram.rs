//! Gram matrices of the cellular and dual bases, `k_λ`, and the Λ-sets.
//!
//! `C_ST C_UV ≡ Φ(T,U) C_SV` modulo the `C^μ` with `μ ▷ λ`, and
//! `D_ST D_UV ≡ Ψ(T,U) D_SV` modulo the `D^μ` with `μ ◁ λ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partitions::MultiPartition;

use super::cellular::CellDatum;
use super::dual::DualBasisTable;
use super::table::AlgebraTable;

#[derive(Debug, Clone)]
pub struct LambdaGram {
    pub shape: MultiPartition,
    /// `G(λ) = (Φ(T,U))`
    pub phi: Matrix,
    /// `G'(λ) = (Ψ(T,U))`
    pub psi: Matrix,
    pub rank: usize,
    pub k: u32,
}

impl LambdaGram {
    pub fn size(&self) -> usize {
        self.phi.rows()
    }
}

#[derive(Debug, Clone)]
pub struct GramData {
    pub cells: Vec<LambdaGram>,
}

/// Cell indices of the five Λ-sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSetIndices {
    pub lambda0: Vec<usize>,
    pub lambda1: Vec<usize>,
    pub lambda2: Vec<usize>,
    pub lambda3: Vec<usize>,
    pub lambda4: Vec<usize>,
}

impl LambdaSetIndices {
    pub fn restricted(&self, keep: &[usize]) -> LambdaSetIndices {
        let r = |v: &Vec<usize>| v.iter().copied().filter(|x| keep.contains(x)).collect();
        LambdaSetIndices {
            lambda0: r(&self.lambda0),
            lambda1: r(&self.lambda1),
            lambda2: r(&self.lambda2),
            lambda3: r(&self.lambda3),
            lambda4: r(&self.lambda4),
        }
    }
}

/// Which spectator pairs `(S, V)` to replay: all `S` with the first `V`, and
/// all `V` with the first `S`.
fn spectators(size: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..size).map(|s| (s, 0)).collect();
    out.extend((1..size).map(|v| (0, v)));
    out
}

/// Extract the structure constants of a cellular-type basis on one cell.
/// `keep_above` selects the direction of the discarded ideal.
fn form_matrix(
    table: &AlgebraTable,
    cd: &CellDatum,
    ci: usize,
    elements: &[Vec<u32>],
    coordinates: &dyn Fn(&[u32]) -> Vec<u32>,
    discard_above: bool,
    name: &str,
) -> Result<Matrix> {
    let f = table.field();
    let cell = &cd.cells[ci];
    let size = cell.size();
    let mut form: Vec<Vec<Option<u32>>> = vec![vec![None; size]; size];
    for (s, v) in spectators(size) {
        for t in 0..size {
            let prods = table.right_products(&elements[cell.index(s, t)]);
            for u in 0..size {
                let y = &elements[cell.index(u, v)];
                let mut prod = vec![0u32; table.dim()];
                for (j, &c) in y.iter().enumerate() {
                    if c != 0 {
                        crate::linalg::axpy(f, &mut prod, c, &prods[j]);
                    }
                }
                let coords = coordinates(&prod);
                let mut value = 0;
                for (m, &c) in coords.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let (cj, s2, t2) = cd.owner(m);
                    if cj == ci {
                        if (s2, t2) != (s, v) {
                            return Err(Error::Internal(format!(
                                "{name}: product ({s},{t})·({u},{v}) in cell {} has a term ({s2},{t2})",
                                cell.shape
                            )));
                        }
                        value = c;
                    } else {
                        let allowed = if discard_above { cd.strictly_above(cj, ci) } else { cd.strictly_above(ci, cj) };
                        if !allowed {
                            return Err(Error::Internal(format!(
                                "{name}: product ({s},{t})·({u},{v}) in cell {} leaves the ideal through {}",
                                cell.shape, cd.cells[cj].shape
                            )));
                        }
                    }
                }
                match form[t][u] {
                    None => form[t][u] = Some(value),
                    Some(prev) if prev != value => {
                        return Err(Error::Internal(format!(
                            "{name}({t},{u}) in cell {} depends on the spectator indices",
                            cell.shape
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let rows: Vec<Vec<u32>> = form.into_iter().map(|r| r.into_iter().map(|x| x.unwrap_or(0)).collect()).collect();
    Matrix::from_rows(f, size, &rows)
}

/// Φ and Ψ for every cell, with `k_λ` checked to be independent of `V`.
pub fn gram_matrices(table: &AlgebraTable, cd: &CellDatum, dual: &DualBasisTable) -> Result<GramData> {
    let f = table.field();
    let mut cells = Vec::with_capacity(cd.cells.len());
    for (ci, cell) in cd.cells.iter().enumerate() {
        let phi = form_matrix(table, cd, ci, &cd.basis, &|v| cd.coordinates(v), true, "Φ")?;
        let psi = form_matrix(table, cd, ci, &dual.basis, &|v| dual.coordinates(v), false, "Ψ")?;
        let size = cell.size();
        let k_at = |v: usize| (0..size).fold(0u32, |acc, x| f.mul_add(acc, phi.get(x, v), psi.get(x, v)));
        let k = k_at(0);
        if let Some(v) = (1..size).find(|&v| k_at(v) != k) {
            return Err(Error::Internal(format!("k_λ for {} differs between V = 0 and V = {v}", cell.shape)));
        }
        let rank = phi.rank();
        cells.push(LambdaGram { shape: cell.shape.clone(), phi, psi, rank, k });
    }
    Ok(GramData { cells })
}

/// `k_λ` for the cell with the given shape.
pub fn k_lambda(gram: &GramData, lam: &MultiPartition) -> Option<u32> {
    gram.cells.iter().find(|c| &c.shape == lam).map(|c| c.k)
}

/// Λ₀ = {G ≠ 0}, Λ₁ = {G nonsingular}, Λ₂ = Λ₀∖Λ₁, Λ₃ = Λ∖Λ₀, Λ₄ = {λ ∈ Λ₁ : k_λ = 0}.
pub fn lambda_sets(gram: &GramData) -> LambdaSetIndices {
    let mut s = LambdaSetIndices { lambda0: vec![], lambda1: vec![], lambda2: vec![], lambda3: vec![], lambda4: vec![] };
    for (i, c) in gram.cells.iter().enumerate() {
        if c.rank == 0 {
            s.lambda3.push(i);
            continue;
        }
        s.lambda0.push(i);
        if c.rank == c.size() {
            s.lambda1.push(i);
            if c.k == 0 {
                s.lambda4.push(i);
            }
        } else {
            s.lambda2.push(i);
        }
    }
    s
}

impl GramData {
    /// Cells where `G(λ) G'(λ) ≠ k_λ E`.
    pub fn product_identity_failures(&self) -> Vec<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let prod = c.phi.mul(&c.psi).expect("square matrices of equal size");
                let expected = Matrix::identity(c.phi.field(), c.size()).scale(c.k);
                prod != expected
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Cells where `Φ(T,U) ≠ Φ(U,T)` somewhere.
    pub fn asymmetric(&self) -> Vec<usize> {
        self.cells.iter().enumerate().filter(|(_, c)| c.phi != c.phi.transpose()).map(|(i, _)| i).collect()
    }

    /// Replace one entry of `G(λ)` for the first cell; used to exercise failure reporting.
    pub fn corrupt_first_entry(&mut self) {
        if let Some(c) = self.cells.first_mut() {
            let f = c.phi.field();
            c.phi.set(0, 0, f.add(c.phi.get(0, 0), 1));
        }
    }
}

/// Cells `λ` with `(C_SS D_SS)² ≠ k_λ C_SS D_SS` for some `S`.
pub fn quasi_idempotent_failures(table: &AlgebraTable, cd: &CellDatum, dual: &DualBasisTable, gram: &GramData) -> Vec<usize> {
    let f = table.field();
    let mut out = Vec::new();
    for (ci, cell) in cd.cells.iter().enumerate() {
        let k = gram.cells[ci].k;
        let bad = (0..cell.size()).any(|s| {
            let idx = cell.index(s, s);
            let x = table.mul(&cd.basis[idx], &dual.basis[idx]);
            let sq = table.mul(&x, &x);
            sq.iter().zip(&x).any(|(&a, &b)| a != f.mul(k, b))
        });
        if bad {
            out.push(ci);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::akalgebra::{build_algebra, djm_basis, trace_and_dual, AKParams};
    use crate::ffield::FieldContext;

    fn data(p: u32, q: i64, a: &[i64], n: usize) -> (AlgebraTable, CellDatum, DualBasisTable, GramData) {
        let t = build_algebra(&AKParams::new(FieldContext::new(p, q).unwrap(), a, n).unwrap()).unwrap();
        let cd = djm_basis(&t).unwrap();
        let dual = trace_and_dual(&t, &cd).unwrap();
        let g = gram_matrices(&t, &cd, &dual).unwrap();
        (t, cd, dual, g)
    }

    #[test]
    fn gram_identities_hold() {
        for (p, q, a, n) in [(7u32, 2i64, vec![0i64, 1], 2usize), (5, 4, vec![0, 0], 1), (7, 6, vec![0, 1], 3)] {
            let (t, cd, dual, g) = data(p, q, &a, n);
            assert!(g.product_identity_failures().is_empty());
            assert!(g.asymmetric().is_empty());
            assert!(quasi_idempotent_failures(&t, &cd, &dual, &g).is_empty());
        }
    }

    #[test]
    fn weight_one_block_instance() {
        let (_, cd, _, g) = data(7, 2, &[0, 1], 2);
        let mid = cd.cell_of(&"1|1".parse().unwrap()).unwrap();
        assert_eq!(g.cells[mid].rank, 1);
        let sets = lambda_sets(&g);
        let names = |v: &Vec<usize>| v.iter().map(|&i| cd.cells[i].shape.to_string()).collect::<Vec<_>>();
        let block = [cd.cell_of(&"2|-".parse().unwrap()).unwrap(), mid, cd.cell_of(&"-|1,1".parse().unwrap()).unwrap()];
        let b = sets.restricted(&block);
        assert_eq!(names(&b.lambda0), vec!["1|1", "-|1,1"]);
        assert_eq!(names(&b.lambda1), vec!["-|1,1"]);
        assert_eq!(names(&b.lambda2), vec!["1|1"]);
        assert_eq!(names(&b.lambda3), vec!["2|-"]);
        assert_eq!(names(&b.lambda4), vec!["-|1,1"]);
        for &i in &block {
            assert_eq!(g.cells[i].k, 0);
        }
    }

    #[test]
    fn corrupted_entry_breaks_the_product_identity() {
        let (_, _, _, mut g) = data(7, 2, &[0, 1], 2);
        g.corrupt_first_entry();
        assert!(!g.product_identity_failures().is_empty());
    }
}
