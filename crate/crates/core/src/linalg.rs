//! Dense exact linear algebra over F_p.
//!
//! Everything here is plain Gaussian elimination on row-major `u32` residues.
//! Subspaces are kept in reduced row-echelon form so that two subspaces are
//! equal exactly when their stored bases are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::PrimeField;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Rows must all have length `cols`; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {} but expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&x| x % field.modulus()));
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    /// Convenience constructor from signed integers.
    pub fn from_i64(field: PrimeField, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn scale(&self, s: u32) -> Self {
        let f = self.field;
        Self {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(x, s)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in other.row(k).iter().zip(acc.iter_mut()) {
                    *slot = (*slot + a * *c as u64) % p;
                }
            }
            for (c, v) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = *v as u32;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let p = self.field.modulus() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &c) in acc.iter_mut().zip(self.row(k)) {
                *slot = (*slot + a as u64 * c as u64) % p;
            }
        }
        acc.into_iter().map(|x| x as u32).collect()
    }

    /// Reduced row-echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..self.cols {
                    self.data.swap(sel * self.cols + k, pr * self.cols + k);
                }
            }
            let inv = f.inv(self.get(pr, c)).expect("pivot is nonzero");
            for k in c..self.cols {
                let v = self.get(pr, k);
                self.data[pr * self.cols + k] = f.mul(v, inv);
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..self.cols {
                    let pv = self.data[pr * self.cols + k];
                    if pv != 0 {
                        let idx = r * self.cols + k;
                        self.data[idx] = f.mul_add(self.data[idx], neg, pv);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            vecs.push(v);
        }
        Subspace::span(f, self.cols, vecs)
    }

    /// Left null space `{y : y M = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    /// Some `x` with `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.data[r * (self.cols + 1) + self.cols] = b[r] % self.field.modulus();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.data[r * 2 * n + n + r] = 1;
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            out.row_mut(r).copy_from_slice(&aug.row(r)[n..]);
        }
        Ok(out)
    }
}

/// A linear subspace of F_p^ambient stored by its reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self::span(field, ambient, (0..ambient).map(|i| unit(ambient, i)).collect())
    }

    /// The span of the given vectors (which need not be independent).
    pub fn span(field: PrimeField, ambient: usize, vectors: Vec<Vec<u32>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let rows = vectors.len();
        let mut data = Vec::with_capacity(rows * ambient);
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length must match ambient dimension");
            data.extend(v.iter().map(|&x| x % field.modulus()));
        }
        let mut m = Matrix { field, rows, cols: ambient, data };
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Self { field, ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` relative to the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.field;
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut rest: Vec<u32> = v.to_vec();
        for (b, &c) in self.basis.iter().zip(&coords) {
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in rest.iter_mut().zip(b) {
                *x = f.mul_add(*x, neg, y);
            }
        }
        rest.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.field, self.ambient, vecs))
    }

    /// Canonical basis of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // Solve a·B1 = b·B2: left kernel of [B1; -B2], then map back through B1.
        let f = self.field;
        let k1 = self.dim();
        let mut rows: Vec<Vec<u32>> = self.basis.clone();
        rows.extend(other.basis.iter().map(|v| v.iter().map(|&x| f.neg(x)).collect()));
        let stacked = Matrix::from_rows(f, self.ambient, &rows)?;
        let kernel = stacked.left_kernel();
        let vecs = kernel
            .basis
            .iter()
            .map(|coeffs| combine(f, self.ambient, &self.basis, &coeffs[..k1]))
            .collect();
        Ok(Subspace::span(f, self.ambient, vecs))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

pub fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// `Σ coeffs[i] · vectors[i]`.
pub fn combine(field: PrimeField, len: usize, vectors: &[Vec<u32>], coeffs: &[u32]) -> Vec<u32> {
    let p = field.modulus() as u64;
    let mut acc = vec![0u64; len];
    for (v, &c) in vectors.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = (*a + c as u64 * x as u64) % p;
        }
    }
    acc.into_iter().map(|x| x as u32).collect()
}

/// `a + s·b` componentwise.
pub fn axpy(field: PrimeField, a: &mut [u32], s: u32, b: &[u32]) {
    if s == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = field.mul_add(*x, s, y);
    }
}

/// A finite-dimensional unital algebra given by structure constants on a basis.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    unit: Vec<u32>,
    /// `table[i][j]` = coordinates of `b_i b_j`.
    table: Vec<Vec<Vec<u32>>>,
}

impl StructureAlgebra {
    pub fn new(field: PrimeField, unit: Vec<u32>, table: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let dim = unit.len();
        if table.len() != dim || table.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch("structure constant table shape".into()));
        }
        Ok(Self { field, dim, unit, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                axpy(f, &mut out, f.mul(a, b), &self.table[i][j]);
            }
        }
        out
    }

    pub fn pow(&self, x: &[u32], mut exp: u64) -> Vec<u32> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_commutative(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Monic least-degree polynomial (coefficients low to high) annihilating `z`.
pub fn minimal_polynomial(alg: &StructureAlgebra, z: &[u32]) -> Vec<u32> {
    let f = alg.field;
    let mut powers: Vec<Vec<u32>> = vec![alg.unit.clone()];
    loop {
        let next = alg.mul(powers.last().unwrap(), z);
        // Is `next` a combination of the earlier powers?
        let m = Matrix::from_rows(f, alg.dim, &powers).expect("rows share the algebra dimension");
        if let Some(c) = m.transpose().solve(&next).expect("shape checked") {
            let mut poly: Vec<u32> = c.iter().map(|&x| f.neg(x)).collect();
            poly.push(1);
            return poly;
        }
        powers.push(next);
    }
}

/// Evaluate a polynomial (coefficients low to high) at an algebra element.
pub fn eval_polynomial(alg: &StructureAlgebra, poly: &[u32], z: &[u32]) -> Vec<u32> {
    let f = alg.field;
    let mut acc = vec![0u32; alg.dim];
    for &c in poly.iter().rev() {
        acc = alg.mul(&acc, z);
        axpy(f, &mut acc, c, &alg.unit);
    }
    acc
}

/// Primitive orthogonal idempotents of a commutative split algebra over F_p.
///
/// The subspace fixed by Frobenius `z ↦ z^p` is spanned by the primitive
/// idempotents; its elements have squarefree split minimal polynomials, and
/// Lagrange projectors at their roots refine the current idempotents until
/// nothing splits further.
pub fn split_idempotents(alg: &StructureAlgebra) -> Result<Vec<Vec<u32>>> {
    if let Some((i, j)) = alg.is_commutative() {
        return Err(Error::NonCommutative(format!("basis elements {i} and {j} do not commute")));
    }
    let f = alg.field;
    let p = f.modulus() as u64;
    let dim = alg.dim;

    let mut frob = Matrix::zeros(f, dim, dim);
    for i in 0..dim {
        let img = alg.pow(&unit(dim, i), p);
        for (j, &x) in img.iter().enumerate() {
            frob.set(i, j, f.sub(x, if i == j { 1 } else { 0 }));
        }
    }
    let fixed = frob.left_kernel();

    let mut idems = vec![alg.unit.clone()];
    for z in fixed.basis() {
        let mut refined = Vec::new();
        for e in &idems {
            let x = alg.mul(e, z);
            let poly = minimal_polynomial(alg, &x);
            let roots = crate::poly::roots(f, &poly)?;
            if roots.len() + 1 != poly.len() {
                return Err(Error::Internal(
                    "minimal polynomial of a Frobenius-fixed element does not split".into(),
                ));
            }
            if roots.len() == 1 {
                refined.push(e.clone());
                continue;
            }
            for (k, &rho) in roots.iter().enumerate() {
                let mut proj = e.clone();
                for (l, &sigma) in roots.iter().enumerate() {
                    if l == k {
                        continue;
                    }
                    let scale = f.inv(f.sub(rho, sigma))?;
                    let mut factor = x.clone();
                    axpy(f, &mut factor, f.neg(sigma), e);
                    proj = alg.mul(&proj, &factor);
                    proj.iter_mut().for_each(|v| *v = f.mul(*v, scale));
                }
                if proj.iter().any(|&v| v != 0) {
                    refined.push(proj);
                }
            }
        }
        idems = refined;
    }
    idems.sort();
    Ok(idems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(f(7), 3).rank(), 3);
        assert_eq!(Matrix::zeros(f(7), 2, 5).rank(), 0);
        let m = Matrix::from_i64(f(7), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(f(7), 4).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(f(7), 3, 3).kernel().dim(), 3);
        let m = Matrix::from_i64(f(7), &[&[1, 2], &[2, 4]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        // (2, -1) scaled
        let v = vec![2, 6];
        assert!(k.contains(&v));
        let mv: Vec<u32> = m.transpose().vec_mul(&v);
        assert!(mv.iter().all(|&x| x == 0));
    }

    #[test]
    fn solve_examples() {
        let fp = f(5);
        let id = Matrix::identity(fp, 3);
        assert_eq!(id.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        let m = Matrix::from_i64(fp, &[&[2]]).unwrap();
        assert_eq!(m.solve(&[3]).unwrap(), Some(vec![4]));
        let inconsistent = Matrix::from_i64(fp, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(inconsistent.solve(&[1, 2]).unwrap(), None);
        assert!(id.solve(&[1, 2]).is_err());
    }

    #[test]
    fn intersect_examples() {
        let fp = f(7);
        let s = Subspace::span(fp, 3, vec![vec![1, 2, 3], vec![0, 1, 1]]);
        assert_eq!(s.intersect(&s).unwrap(), s);
        assert!(s.intersect(&Subspace::zero(fp, 3)).unwrap().is_zero());
        let xy = Subspace::span(fp, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let yz = Subspace::span(fp, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let line = xy.intersect(&yz).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(xy.contains_subspace(&line) && yz.contains_subspace(&line));
        assert_eq!(line.basis()[0], vec![0, 1, 0]);
        assert!(xy.intersect(&Subspace::zero(fp, 4)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let fp = f(11);
        let m = Matrix::from_i64(fp, &[&[1, 2, 0], &[3, 1, 4], &[0, 5, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(fp, 3));
        let sing = Matrix::from_i64(fp, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(sing.inverse().is_err());
    }

    fn diag_algebra(fp: PrimeField, k: usize) -> StructureAlgebra {
        let table = (0..k)
            .map(|i| (0..k).map(|j| if i == j { unit(k, i) } else { vec![0; k] }).collect())
            .collect();
        StructureAlgebra::new(fp, vec![1; k], table).unwrap()
    }

    #[test]
    fn minimal_polynomial_examples() {
        let fp = f(7);
        let alg = diag_algebra(fp, 2);
        assert_eq!(minimal_polynomial(&alg, &[1, 1]), vec![6, 1]);
        assert_eq!(minimal_polynomial(&alg, &[0, 0]), vec![0, 1]);
        assert_eq!(minimal_polynomial(&alg, &[1, 0]), vec![0, 6, 1]);
    }

    #[test]
    fn split_examples() {
        let fp = f(7);
        let one = StructureAlgebra::new(fp, vec![1], vec![vec![vec![1]]]).unwrap();
        assert_eq!(split_idempotents(&one).unwrap(), vec![vec![1]]);

        let two = diag_algebra(fp, 2);
        assert_eq!(split_idempotents(&two).unwrap(), vec![vec![0, 1], vec![1, 0]]);

        // F_p[x]/(x^2) on basis (1, x)
        let dual = StructureAlgebra::new(
            fp,
            vec![1, 0],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap();
        assert_eq!(split_idempotents(&dual).unwrap(), vec![vec![1, 0]]);
    }

    #[test]
    fn split_rejects_noncommutative() {
        // 2x2 matrix units E11, E12, E21, E22
        let fp = f(5);
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut table = vec![vec![vec![0; 4]; 4]; 4];
        for (a, b) in (0..2).flat_map(|a| (0..2).map(move |b| (a, b))) {
            for (c, d) in (0..2).flat_map(|c| (0..2).map(move |d| (c, d))) {
                if b == c {
                    table[idx(a, b)][idx(c, d)] = unit(4, idx(a, d));
                }
            }
        }
        let alg = StructureAlgebra::new(fp, vec![1, 0, 0, 1], table).unwrap();
        assert!(matches!(split_idempotents(&alg), Err(Error::NonCommutative(_))));
    }

    #[test]
    fn split_semisimple_with_shuffled_basis() {
        // F_p^3 with basis u1 = (1,1,1), u2 = (1,2,0), u3 = (0,1,3) over F_7.
        let fp = f(7);
        let basis = [[1u32, 1, 1], [1, 2, 0], [0, 1, 3]];
        let m = Matrix::from_rows(fp, 3, &basis.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        let minv = m.inverse().unwrap();
        let mut table = vec![vec![vec![0; 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let prod: Vec<u32> = (0..3).map(|k| fp.mul(basis[i][k], basis[j][k])).collect();
                table[i][j] = minv.vec_mul(&prod);
            }
        }
        let unit_coords = minv.vec_mul(&[1, 1, 1]);
        let alg = StructureAlgebra::new(fp, unit_coords.clone(), table).unwrap();
        let idems = split_idempotents(&alg).unwrap();
        assert_eq!(idems.len(), 3);
        let mut total = vec![0; 3];
        for (a, ea) in idems.iter().enumerate() {
            axpy(fp, &mut total, 1, ea);
            for (b, eb) in idems.iter().enumerate() {
                let prod = alg.mul(ea, eb);
                if a == b {
                    assert_eq!(&prod, ea);
                } else {
                    assert!(prod.iter().all(|&x| x == 0));
                }
            }
        }
        assert_eq!(total, unit_coords);
    }

    fn matrix_strategy(p: u32) -> impl Strategy<Value = (usize, usize, Vec<u32>)> {
        (1usize..7, 1usize..7).prop_flat_map(move |(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(0..p, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((r, c, data) in matrix_strategy(5)) {
            let fp = f(5);
            let rows: Vec<Vec<u32>> = data.chunks(c).map(|x| x.to_vec()).collect();
            let m = Matrix::from_rows(fp, c, &rows).unwrap();
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.dim(), c);
            for v in k.basis() {
                let img = m.transpose().vec_mul(v);
                prop_assert!(img.iter().all(|&x| x == 0));
            }
            prop_assert_eq!(r, m.rows());
        }

        #[test]
        fn intersection_is_contained(
            a in proptest::collection::vec(proptest::collection::vec(0u32..3, 5), 0..4),
            b in proptest::collection::vec(proptest::collection::vec(0u32..3, 5), 0..4),
            ca in proptest::collection::vec(0u32..3, 4),
            cb in proptest::collection::vec(0u32..3, 4),
        ) {
            let fp = f(3);
            let s1 = Subspace::span(fp, 5, a.clone());
            let s2 = Subspace::span(fp, 5, b.clone());
            let cap = s1.intersect(&s2).unwrap();
            prop_assert!(s1.contains_subspace(&cap));
            prop_assert!(s2.contains_subspace(&cap));
            prop_assert_eq!(cap.dim() + s1.sum(&s2).unwrap().dim(), s1.dim() + s2.dim());
            // random member of s1 that also lies in s2 must lie in the intersection
            let v = combine(fp, 5, s1.basis(), &ca[..s1.dim().min(4)]);
            if s2.contains(&v) {
                prop_assert!(cap.contains(&v));
            }
            let w = combine(fp, 5, s2.basis(), &cb[..s2.dim().min(4)]);
            if s1.contains(&w) {
                prop_assert!(cap.contains(&w));
            }
        }
    }
}
