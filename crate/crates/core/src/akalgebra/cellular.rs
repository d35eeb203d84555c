//! The Dipper-James-Mathas cellular basis and a direct check of cellularity.
//!
//! `m_λ = u_λ⁺ x_λ` with `x_λ = Σ_{w ∈ S_λ} T_w` over the row stabilizer of the
//! superstandard tableau and `u_λ⁺ = Π_{s=2}^r Π_{k ≤ |λ^(1)|+…+|λ^(s-1)|} (L_k - Q_s)`;
//! `C_ST = T_{d(S)}* m_λ T_{d(T)}`. Cell ideals are spanned by the `C^μ` with
//! `μ ▷ λ`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partitions::{enumerate_multipartitions, enumerate_standard_tableaux, strictly_dominates, MultiPartition, StandardTableau};

use super::table::AlgebraTable;

#[derive(Debug, Clone)]
pub struct Cell {
    pub shape: MultiPartition,
    pub tableaux: Vec<StandardTableau>,
    /// Global index of `C_{t_0 t_0}`.
    pub offset: usize,
    /// `d(t)`: `t^λ · d(t) = t` in the group's composition order.
    d: Vec<usize>,
}

impl Cell {
    pub fn size(&self) -> usize {
        self.tableaux.len()
    }

    /// Global index of `C_{ST}`.
    pub fn index(&self, s: usize, t: usize) -> usize {
        self.offset + s * self.size() + t
    }

    pub fn d(&self, t: usize) -> usize {
        self.d[t]
    }
}

#[derive(Debug, Clone)]
pub struct CellDatum {
    pub cells: Vec<Cell>,
    /// `C_ST` in normal-form coordinates, by global index.
    pub basis: Vec<Vec<u32>>,
    /// `(cell, s, t)` for every global index.
    owner: Vec<(usize, usize, usize)>,
    /// `above[μ][λ]`: `μ ▷ λ`.
    above: Vec<Vec<bool>>,
    coords: Matrix,
}

/// Outcome of [`check_cellularity`]; generator actions on each cell module
/// are recorded when the check passes.
#[derive(Debug, Clone)]
pub struct CellularityReport {
    pub holds: bool,
    pub witness: Option<String>,
    /// `actions[cell][g]`: `C_T · T_g ≡ Σ_V actions[cell][g][T][V] C_V`.
    pub actions: Vec<Vec<Matrix>>,
}

fn tableau_permutation(table: &AlgebraTable, lam: &MultiPartition, t: &StandardTableau) -> Result<usize> {
    let sup = StandardTableau::superstandard(lam);
    let n = lam.size();
    // f(v) = entry of t where t^λ holds v; d = f^{-1}.
    let mut f = vec![0u8; n];
    for node in lam.nodes() {
        f[sup.entry(node) as usize - 1] = (t.entry(node) - 1) as u8;
    }
    let sym = table.sym();
    let idx = sym.index_of(&f).ok_or_else(|| Error::Internal(format!("{t} is not a permutation of 1..{n}")))?;
    Ok(sym.inverse(idx))
}

/// How the row-stabilizer sum `x_λ` weights its terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowSum {
    Plain,
    /// `Σ q^{ℓ(w)} T_w`; kept only to show it does not give a cellular basis here.
    #[cfg(test)]
    LengthWeighted,
}

/// `m_λ = u_λ⁺ x_λ`.
fn murphy_element(table: &AlgebraTable, lam: &MultiPartition, row_sum: RowSum) -> Vec<u32> {
    let f = table.field();
    let qs = table.params().cyclotomic();
    let sizes = lam.cumulative_sizes();
    let mut v = table.one();
    for s in 1..lam.r() {
        let upto = sizes[s];
        for k in 0..upto {
            let lk = table.right_l(k, &v);
            v = lk.iter().zip(&v).map(|(&a, &b)| f.sub(a, f.mul(qs[s], b))).collect();
        }
    }
    let rows: Vec<usize> = lam
        .components()
        .iter()
        .flat_map(|c| c.parts().iter().map(|&x| x as usize))
        .collect();
    let mut m = vec![0u32; table.dim()];
    for w in table.sym().young_subgroup(&rows) {
        let term = table.right_t_word(&v, w);
        let c = match row_sum {
            RowSum::Plain => 1,
            #[cfg(test)]
            RowSum::LengthWeighted => f.pow(table.params().ctx().q(), table.sym().length(w) as u64),
        };
        crate::linalg::axpy(f, &mut m, c, &term);
    }
    m
}

/// Build the DJM basis. Fails if the elements are not a basis.
pub fn djm_basis(table: &AlgebraTable) -> Result<CellDatum> {
    djm_basis_with(table, RowSum::Plain)
}

fn djm_basis_with(table: &AlgebraTable, row_sum: RowSum) -> Result<CellDatum> {
    let params = table.params();
    let shapes = enumerate_multipartitions(params.n(), params.r());
    let mut cells = Vec::with_capacity(shapes.len());
    let mut basis = Vec::with_capacity(table.dim());
    let mut owner = Vec::with_capacity(table.dim());
    for (ci, lam) in shapes.iter().enumerate() {
        let tableaux = enumerate_standard_tableaux(lam)?;
        let d: Vec<usize> = tableaux.iter().map(|t| tableau_permutation(table, lam, t)).collect::<Result<_>>()?;
        let m = murphy_element(table, lam, row_sum);
        let offset = basis.len();
        for (s, &ds) in d.iter().enumerate() {
            let left = table.left_t_word(table.sym().inverse(ds), &m);
            for (t, &dt) in d.iter().enumerate() {
                basis.push(table.right_t_word(&left, dt));
                owner.push((ci, s, t));
            }
        }
        cells.push(Cell { shape: lam.clone(), tableaux, offset, d });
    }
    if basis.len() != table.dim() {
        return Err(Error::Internal(format!(
            "Σ n_λ² = {} but the algebra has dimension {}",
            basis.len(),
            table.dim()
        )));
    }
    let above = shapes
        .iter()
        .map(|mu| shapes.iter().map(|lam| strictly_dominates(mu, lam).unwrap_or(false)).collect())
        .collect();
    let transition = Matrix::from_rows(table.field(), table.dim(), &basis)?;
    let coords = transition
        .inverse()
        .map_err(|_| Error::Internal("the DJM transition matrix is singular".into()))?;
    Ok(CellDatum { cells, basis, owner, above, coords })
}

impl CellDatum {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn element(&self, cell: usize, s: usize, t: usize) -> &[u32] {
        &self.basis[self.cells[cell].index(s, t)]
    }

    pub fn owner(&self, idx: usize) -> (usize, usize, usize) {
        self.owner[idx]
    }

    /// `μ ▷ λ` for cell indices.
    pub fn strictly_above(&self, mu: usize, lam: usize) -> bool {
        self.above[mu][lam]
    }

    pub fn cell_of(&self, lam: &MultiPartition) -> Option<usize> {
        self.cells.iter().position(|c| &c.shape == lam)
    }

    /// Coordinates of a normal-form vector in the cellular basis.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.coords.vec_mul(v)
    }

    /// The same datum with one coordinate of one basis element shifted by 1.
    /// Used as a negative control for [`check_cellularity`].
    pub fn perturbed(&self, element: usize, position: usize) -> Result<CellDatum> {
        let f = self.coords.field();
        let mut basis = self.basis.clone();
        basis[element][position] = f.add(basis[element][position], 1);
        let coords = Matrix::from_rows(f, basis.len(), &basis)?.inverse()?;
        Ok(CellDatum { cells: self.cells.clone(), basis, owner: self.owner.clone(), above: self.above.clone(), coords })
    }
}

/// Checks `C_ST · T_g ≡ Σ_V r(T, V, g) C_SV (mod C^μ, μ ▷ λ)` with `r`
/// independent of `S`, for every generator, and `C_ST* = C_TS`.
pub fn check_cellularity(table: &AlgebraTable, cd: &CellDatum) -> CellularityReport {
    let f = table.field();
    let n = table.params().n();
    let mut actions = Vec::with_capacity(cd.cells.len());
    let fail = |w: String| CellularityReport { holds: false, witness: Some(w), actions: Vec::new() };
    for (ci, cell) in cd.cells.iter().enumerate() {
        let size = cell.size();
        let mut per_gen = Vec::with_capacity(n);
        for g in 0..n {
            let mut act = Matrix::zeros(f, size, size);
            for s in 0..size {
                for t in 0..size {
                    let img = table.right_gen(g, &cd.basis[cell.index(s, t)]);
                    let coords = cd.coordinates(&img);
                    let mut row = vec![0u32; size];
                    for (m, &c) in coords.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let (cj, s2, t2) = cd.owner[m];
                        if cj == ci {
                            if s2 != s {
                                return fail(format!(
                                    "C[{}]({s},{t}) · T{g} has a term C({s2},{t2}) with a different left index",
                                    cell.shape
                                ));
                            }
                            row[t2] = c;
                        } else if !cd.above[cj][ci] {
                            return fail(format!(
                                "C[{}]({s},{t}) · T{g} has a term indexed by {}, which does not dominate it",
                                cell.shape, cd.cells[cj].shape
                            ));
                        }
                    }
                    if s == 0 {
                        act.row_mut(t).copy_from_slice(&row);
                    } else if act.row(t) != row.as_slice() {
                        return fail(format!(
                            "C[{}]({s},{t}) · T{g} has coefficients depending on the left index",
                            cell.shape
                        ));
                    }
                }
            }
            per_gen.push(act);
        }
        actions.push(per_gen);
        for s in 0..size {
            for t in 0..size {
                if table.star(&cd.basis[cell.index(s, t)]) != cd.basis[cell.index(t, s)] {
                    return fail(format!("C[{}]({s},{t})* ≠ C({t},{s})", cell.shape));
                }
            }
        }
    }
    CellularityReport { holds: true, witness: None, actions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::akalgebra::{build_algebra, AKParams};
    use crate::ffield::FieldContext;
    use crate::partitions::count_standard_tableaux;

    fn table(p: u32, q: i64, a: &[i64], n: usize) -> AlgebraTable {
        build_algebra(&AKParams::new(FieldContext::new(p, q).unwrap(), a, n).unwrap()).unwrap()
    }

    #[test]
    fn counts_match_the_dimension() {
        for n in 1..=3 {
            let t = table(7, 2, &[0, 1], n);
            let cd = djm_basis(&t).unwrap();
            let total: usize = cd
                .cells
                .iter()
                .map(|c| {
                    let k: usize = count_standard_tableaux(&c.shape).try_into().unwrap();
                    assert_eq!(k, c.size());
                    k * k
                })
                .sum();
            assert_eq!(total, t.dim());
        }
    }

    #[test]
    fn cellular_for_small_instances() {
        for (p, q, a, n) in [
            (7u32, 2i64, vec![0i64, 1], 1usize),
            (7, 2, vec![0, 1], 2),
            (5, 4, vec![0, 0], 2),
            (7, 6, vec![0, 1], 3),
            (13, 3, vec![0, 1, 2], 2),
        ] {
            let t = table(p, q, &a, n);
            let cd = djm_basis(&t).unwrap();
            let rep = check_cellularity(&t, &cd);
            assert!(rep.holds, "p={p} q={q} a={a:?} n={n}: {:?}", rep.witness);
        }
    }

    #[test]
    fn two_dimensional_instance() {
        // Q1 = Q2 = 1: m_((1),∅) = L1 - 1, m_(∅,(1)) = 1
        let t = table(5, 4, &[0, 0], 1);
        let cd = djm_basis(&t).unwrap();
        assert_eq!(cd.len(), 2);
        let top = cd.cell_of(&"1|-".parse().unwrap()).unwrap();
        assert_eq!(cd.element(top, 0, 0), &[4, 1]);
        let bottom = cd.cell_of(&"-|1".parse().unwrap()).unwrap();
        assert_eq!(cd.element(bottom, 0, 0), &[1, 0]);
    }

    #[test]
    fn length_weighted_row_sums_are_not_cellular() {
        // x_λ = Σ q^ℓ(w) T_w breaks C_ST* = C_TS or the ideal condition for T_1
        let t = table(7, 2, &[0, 1], 2);
        match djm_basis_with(&t, RowSum::LengthWeighted) {
            Ok(cd) => assert!(!check_cellularity(&t, &cd).holds),
            Err(_) => {}
        }
        assert!(check_cellularity(&t, &djm_basis_with(&t, RowSum::Plain).unwrap()).holds);
    }

    #[test]
    fn perturbed_basis_is_rejected() {
        let t = table(7, 2, &[0, 1], 2);
        let cd = djm_basis(&t).unwrap();
        let bad = cd.perturbed(3, 5).unwrap();
        let rep = check_cellularity(&t, &bad);
        assert!(!rep.holds);
        assert!(rep.witness.is_some());
    }
}
