//! Cell modules, their simple heads, and the radical of the algebra as the
//! common annihilator of the simple modules.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::cellular::CellularityReport;
use super::gram::GramData;
use super::table::{AlgebraTable, Step};

#[derive(Debug, Clone)]
pub struct ModuleData {
    /// `rep[cell][j]`: right action of basis element `b_j` on `W(λ)`.
    rep: Vec<Vec<Matrix>>,
    /// Basis of `L(λ) = W(λ)/rad λ`, realized as the row space of `G(λ)`.
    simple_basis: Vec<Subspace>,
}

impl ModuleData {
    pub fn cell_count(&self) -> usize {
        self.rep.len()
    }

    pub fn cell_dim(&self, cell: usize) -> usize {
        self.rep[cell].first().map(|m| m.rows()).unwrap_or(0)
    }

    pub fn simple_dim(&self, cell: usize) -> usize {
        self.simple_basis[cell].dim()
    }

    /// Matrix of `a` acting on `W(λ)` (row vectors, right action).
    pub fn act(&self, cell: usize, a: &[u32]) -> Matrix {
        let size = self.cell_dim(cell);
        let f = self.rep[cell][0].field();
        let mut out = Matrix::zeros(f, size, size);
        for (j, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let m = &self.rep[cell][j];
            for r in 0..size {
                let row = out.row_mut(r);
                for (k, x) in row.iter_mut().enumerate() {
                    *x = f.mul_add(*x, c, m.get(r, k));
                }
            }
        }
        out
    }

    /// Matrix of `a` acting on `L(λ)` in the basis of [`Self::simple_basis`].
    pub fn act_on_simple(&self, cell: usize, a: &[u32], gram: &GramData) -> Matrix {
        let g = &gram.cells[cell].phi;
        let basis = &self.simple_basis[cell];
        let f = g.field();
        let rho = self.act(cell, a);
        let mut out = Matrix::zeros(f, basis.dim(), basis.dim());
        // y = x G with x a preimage; y · a = (x ρ(a)) G.
        for (k, y) in basis.basis().iter().enumerate() {
            let x = g.transpose().solve(y).ok().flatten().expect("y lies in the row space of G");
            let img = rho.vec_mul(&x);
            let img = g.vec_mul(&img);
            let coords = basis.coordinates(&img).expect("rad λ is a submodule");
            out.row_mut(k).copy_from_slice(&coords);
        }
        out
    }

    pub fn simple_basis(&self, cell: usize) -> &Subspace {
        &self.simple_basis[cell]
    }
}

/// Matrices of every basis element on every cell module, from the generator
/// actions recorded by the cellularity check.
pub fn cell_and_simple_modules(table: &AlgebraTable, report: &CellularityReport, gram: &GramData) -> Result<ModuleData> {
    if !report.holds {
        return Err(Error::Precondition("cell modules need a verified cellular basis".into()));
    }
    let f = table.field();
    let n = table.params().n();
    let qinv = f.inv(table.params().ctx().q())?;
    let mut rep = Vec::with_capacity(report.actions.len());
    let mut simple_basis = Vec::with_capacity(report.actions.len());
    for (ci, gens) in report.actions.iter().enumerate() {
        let size = gens[0].rows();
        // ρ(L_1) = ρ(T_0), ρ(L_{k+1}) = q^{-1} ρ(T_k) ρ(L_k) ρ(T_k)
        let mut jm = vec![gens[0].clone()];
        for k in 1..n {
            let m = gens[k].mul(&jm[k - 1])?.mul(&gens[k])?.scale(qinv);
            jm.push(m);
        }
        let mut mats: Vec<Matrix> = Vec::with_capacity(table.dim());
        for step in table.plan() {
            let m = match *step {
                Step::Root => Matrix::identity(f, size),
                Step::L { prev, k } => mats[prev].mul(&jm[k])?,
                Step::T { prev, i } => mats[prev].mul(&gens[i])?,
            };
            mats.push(m);
        }
        rep.push(mats);
        let g = &gram.cells[ci].phi;
        let rows: Vec<Vec<u32>> = (0..size).map(|r| g.row(r).to_vec()).collect();
        simple_basis.push(Subspace::span(f, size, rows));
    }
    Ok(ModuleData { rep, simple_basis })
}

/// `rad A = {a : ρ_λ(a) G(λ) = 0 for every λ with G(λ) ≠ 0}`, checked to be a
/// two-sided ideal of the expected dimension.
pub fn radical(table: &AlgebraTable, modules: &ModuleData, gram: &GramData) -> Result<Subspace> {
    let f = table.field();
    let dim = table.dim();
    let live: Vec<usize> = (0..gram.cells.len()).filter(|&i| gram.cells[i].rank > 0).collect();
    let width: usize = live.iter().map(|&i| gram.cells[i].size().pow(2)).sum();
    let mut big = Matrix::zeros(f, dim, width.max(1));
    for j in 0..dim {
        let mut col = 0;
        for &ci in &live {
            let prod = modules.rep[ci][j].mul(&gram.cells[ci].phi)?;
            for r in 0..prod.rows() {
                for c in 0..prod.cols() {
                    big.set(j, col, prod.get(r, c));
                    col += 1;
                }
            }
        }
    }
    let rad = big.left_kernel();
    let semisimple: usize = live.iter().map(|&i| gram.cells[i].rank.pow(2)).sum();
    if rad.dim() + semisimple != dim {
        return Err(Error::Internal(format!(
            "dim rad A = {} but dim A - Σ (dim L)² = {}",
            rad.dim(),
            dim - semisimple
        )));
    }
    for x in rad.basis() {
        for g in 0..table.params().n() {
            if !rad.contains(&table.right_gen(g, x)) || !rad.contains(&table.left_gen(g, x)) {
                return Err(Error::Internal("the computed radical is not a two-sided ideal".into()));
            }
        }
    }
    Ok(rad)
}

/// `span{x y : x ∈ X, y ∈ Y}`.
pub(crate) fn product_span(table: &AlgebraTable, xs: &[Vec<u32>], ys: &[Vec<u32>]) -> Subspace {
    let f = table.field();
    let mut vecs = Vec::with_capacity(xs.len() * ys.len());
    for x in xs {
        let prods = table.right_products(x);
        for y in ys {
            let mut v = vec![0u32; table.dim()];
            for (j, &c) in y.iter().enumerate() {
                if c != 0 {
                    crate::linalg::axpy(f, &mut v, c, &prods[j]);
                }
            }
            vecs.push(v);
        }
    }
    Subspace::span(f, table.dim(), vecs)
}

/// Smallest `k` with `I^k = 0`, or an error after `limit` steps.
pub fn nilpotency_index(table: &AlgebraTable, ideal: &Subspace, limit: usize) -> Result<usize> {
    let mut power = ideal.clone();
    let mut k = 1;
    while !power.is_zero() {
        if k >= limit {
            return Err(Error::Internal(format!("ideal is not nilpotent within {limit} steps")));
        }
        power = product_span(table, power.basis(), ideal.basis());
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::akalgebra::{build_algebra, check_cellularity, djm_basis, gram_matrices, trace_and_dual, AKParams};
    use crate::ffield::FieldContext;
    use rand::{Rng, SeedableRng};

    fn pipeline(p: u32, q: i64, a: &[i64], n: usize) -> (AlgebraTable, GramData, ModuleData, Subspace) {
        let t = build_algebra(&AKParams::new(FieldContext::new(p, q).unwrap(), a, n).unwrap()).unwrap();
        let cd = djm_basis(&t).unwrap();
        let rep = check_cellularity(&t, &cd);
        let dual = trace_and_dual(&t, &cd).unwrap();
        let g = gram_matrices(&t, &cd, &dual).unwrap();
        let m = cell_and_simple_modules(&t, &rep, &g).unwrap();
        let rad = radical(&t, &m, &g).unwrap();
        (t, g, m, rad)
    }

    #[test]
    fn local_two_dimensional_algebra() {
        let (t, _, _, rad) = pipeline(5, 4, &[0, 0], 1);
        assert_eq!(rad.dim(), 1);
        // T0 - 1 spans the radical
        assert!(rad.contains(&[4, 1]));
        assert_eq!(nilpotency_index(&t, &rad, 10).unwrap(), 2);
    }

    #[test]
    fn semisimple_instance_has_zero_radical() {
        // e = 6 with Q = (1, q^3): every block has weight 0 for n = 2
        let (_, _, _, rad) = pipeline(7, 3, &[0, 3], 2);
        assert!(rad.is_zero());
    }

    #[test]
    fn module_actions_are_homomorphisms() {
        let (t, g, m, _) = pipeline(7, 2, &[0, 1], 2);
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        for _ in 0..30 {
            let (i, j) = (rng.gen_range(0..t.dim()), rng.gen_range(0..t.dim()));
            let (x, y) = (t.basis_vector(i), t.basis_vector(j));
            let xy = t.mul(&x, &y);
            for ci in 0..m.cell_count() {
                assert_eq!(m.act(ci, &xy), m.act(ci, &x).mul(&m.act(ci, &y)).unwrap());
                let s = m.act_on_simple(ci, &xy, &g);
                let prod = m.act_on_simple(ci, &x, &g).mul(&m.act_on_simple(ci, &y, &g)).unwrap();
                assert_eq!(s, prod);
            }
        }
        for ci in 0..m.cell_count() {
            assert_eq!(m.simple_dim(ci), g.cells[ci].rank);
        }
    }

    #[test]
    fn radical_is_nilpotent_with_wedderburn_dimension() {
        let (t, g, _, rad) = pipeline(7, 2, &[0, 1], 2);
        let ss: usize = g.cells.iter().map(|c| c.rank * c.rank).sum();
        assert_eq!(rad.dim(), t.dim() - ss);
        assert!(nilpotency_index(&t, &rad, 10).unwrap() <= 3);
    }
}
