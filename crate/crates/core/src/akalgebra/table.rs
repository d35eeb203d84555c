//! Normal-form multiplication in `H_n(q, Q)`.
//!
//! The basis is `L_1^{c_1} ... L_n^{c_n} T_w` with `0 ≤ c_i < r`, where
//! `L_1 = T_0` and `L_{i+1} = q^{-1} T_i L_i T_i`. Products are reduced with
//! the commutation rules
//!
//! ```text
//! T_i L_i     = L_{i+1} T_i - (q-1) L_{i+1}
//! T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}
//! T_i L_j     = L_j T_i                      (j ≠ i, i+1)
//! ```
//!
//! together with a normal form for each `L_j^r`. Reducing the highest index
//! `j` with exponent `≥ r` first lowers the exponent vector lexicographically
//! from the top, so rewriting terminates.
//!
//! Generator tables are computed once by rewriting; everything else is
//! linear algebra on them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ffield::PrimeField;
use crate::linalg::Matrix;

use super::perm::SymmetricGroup;
use super::AKParams;

pub const DEFAULT_DIMENSION_CAP: usize = 1000;
const STEP_BUDGET: usize = 50_000_000;

type Key = (Vec<u8>, usize);
type Poly = HashMap<Key, u32>;

fn add_to(f: PrimeField, p: &mut Poly, key: Key, c: u32) {
    if c == 0 {
        return;
    }
    let slot = p.entry(key).or_insert(0);
    *slot = f.add(*slot, c);
}

/// Rows of a linear map in sparse form; row `j` is the image of basis element `j`.
#[derive(Debug, Clone)]
pub(crate) struct SparseMap {
    rows: Vec<Vec<(usize, u32)>>,
}

impl SparseMap {
    fn from_dense_rows(rows: Vec<Vec<u32>>) -> Self {
        Self {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().enumerate().filter(|&(_, c)| c != 0).collect())
                .collect(),
        }
    }

    /// `v ↦ Σ_j v_j · row_j`
    pub(crate) fn apply(&self, f: PrimeField, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.rows.len()];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(k, x) in &self.rows[j] {
                out[k] = f.mul_add(out[k], c, x);
            }
        }
        out
    }

    fn to_matrix(&self, f: PrimeField) -> Matrix {
        let n = self.rows.len();
        let mut m = Matrix::zeros(f, n, n);
        for (j, row) in self.rows.iter().enumerate() {
            for &(k, x) in row {
                m.set(j, k, x);
            }
        }
        m
    }
}

/// How basis element `j` is reached from an earlier one by right multiplication.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Step {
    Root,
    /// `b_j = b_prev · L_{k+1}`
    L { prev: usize, k: usize },
    /// `b_j = b_prev · T_i`
    T { prev: usize, i: usize },
}

struct Rewriter<'a> {
    f: PrimeField,
    q: u32,
    qinv: u32,
    qm1: u32,
    r: usize,
    n: usize,
    sym: &'a SymmetricGroup,
    /// `T x^a y^b` for `x = L_i, y = L_{i+1}`, indexed `a * r + b`:
    /// terms `(a', b', has_t, coeff)` meaning `coeff · x^{a'} y^{b'} T^{has_t}`.
    swap: Vec<Vec<(u8, u8, bool, u32)>>,
    top: Vec<Poly>,
    hecke_memo: HashMap<(usize, usize), Vec<(usize, u32)>>,
    steps: usize,
}

impl<'a> Rewriter<'a> {
    fn new(params: &AKParams, sym: &'a SymmetricGroup) -> Result<Self> {
        let f = params.ctx().field();
        let q = params.ctx().q();
        let mut rw = Self {
            f,
            q,
            qinv: f.inv(q)?,
            qm1: f.sub(q, 1),
            r: params.r(),
            n: params.n(),
            sym,
            swap: Vec::new(),
            top: Vec::new(),
            hecke_memo: HashMap::new(),
            steps: 0,
        };
        rw.swap = (0..rw.r * rw.r).map(|ab| rw.swap_terms(ab / rw.r, ab % rw.r)).collect();
        rw.build_top_powers(&params.cyclotomic())?;
        Ok(rw)
    }

    fn swap_terms(&self, a: usize, b: usize) -> Vec<(u8, u8, bool, u32)> {
        let f = self.f;
        let mut memo: HashMap<(usize, usize), HashMap<(u8, u8, bool), u32>> = HashMap::new();
        fn go(
            f: PrimeField,
            qm1: u32,
            a: usize,
            b: usize,
            memo: &mut HashMap<(usize, usize), HashMap<(u8, u8, bool), u32>>,
        ) -> HashMap<(u8, u8, bool), u32> {
            if let Some(v) = memo.get(&(a, b)) {
                return v.clone();
            }
            let mut out: HashMap<(u8, u8, bool), u32> = HashMap::new();
            let mut put = |k: (u8, u8, bool), c: u32| {
                let s = out.entry(k).or_insert(0);
                *s = f.add(*s, c);
            };
            if a == 0 && b == 0 {
                put((0, 0, true), 1);
            } else if a > 0 {
                // T x^a y^b = y (T x^{a-1} y^b) - (q-1) x^{a-1} y^{b+1}
                for ((a2, b2, t), c) in go(f, qm1, a - 1, b, memo) {
                    put((a2, b2 + 1, t), c);
                }
                put(((a - 1) as u8, (b + 1) as u8, false), f.neg(qm1));
            } else {
                // T y^b = x (T y^{b-1}) + (q-1) y^b
                for ((a2, b2, t), c) in go(f, qm1, 0, b - 1, memo) {
                    put((a2 + 1, b2, t), c);
                }
                put((0, b as u8, false), qm1);
            }
            out.retain(|_, c| *c != 0);
            memo.insert((a, b), out.clone());
            out
        }
        let mut terms: Vec<(u8, u8, bool, u32)> =
            go(f, self.qm1, a, b, &mut memo).into_iter().map(|((x, y, t), c)| (x, y, t, c)).collect();
        terms.sort_unstable();
        terms
    }

    fn tick(&mut self, k: usize) -> Result<()> {
        self.steps += k;
        if self.steps > STEP_BUDGET {
            return Err(Error::Internal(format!("rewriting exceeded the step budget of {STEP_BUDGET}")));
        }
        Ok(())
    }

    /// `T_i · T_u` in the Hecke algebra of S_n.
    fn hecke_left(&self, i: usize, u: usize, c: u32, out: &mut Vec<(usize, u32)>) {
        let v = self.sym.left_simple(i, u);
        if self.sym.length(v) > self.sym.length(u) {
            out.push((v, c));
        } else {
            out.push((u, self.f.mul(c, self.qm1)));
            out.push((v, self.f.mul(c, self.q)));
        }
    }

    /// `T_u · T_i`.
    fn hecke_right(&self, u: usize, i: usize, c: u32, out: &mut Vec<(usize, u32)>) {
        let v = self.sym.right_simple(i, u);
        if self.sym.length(v) > self.sym.length(u) {
            out.push((v, c));
        } else {
            out.push((u, self.f.mul(c, self.qm1)));
            out.push((v, self.f.mul(c, self.q)));
        }
    }

    /// `T_x · T_y`.
    fn hecke(&mut self, x: usize, y: usize) -> Vec<(usize, u32)> {
        if let Some(v) = self.hecke_memo.get(&(x, y)) {
            return v.clone();
        }
        let mut cur: HashMap<usize, u32> = HashMap::from([(y, 1)]);
        for &i in self.sym.reduced_word(x).iter().rev() {
            let mut next: HashMap<usize, u32> = HashMap::new();
            let mut buf = Vec::new();
            for (&u, &c) in &cur {
                buf.clear();
                self.hecke_left(i, u, c, &mut buf);
                for &(v, d) in &buf {
                    let s = next.entry(v).or_insert(0);
                    *s = self.f.add(*s, d);
                }
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        let mut out: Vec<(usize, u32)> = cur.into_iter().collect();
        out.sort_unstable();
        self.hecke_memo.insert((x, y), out.clone());
        out
    }

    /// `T_i · p` for `i ≥ 1`; `p` must have all exponents below `r`.
    fn left_t(&mut self, i: usize, p: &Poly) -> Result<Poly> {
        self.tick(p.len())?;
        let f = self.f;
        let mut out = Poly::new();
        let mut buf = Vec::new();
        for ((exps, u), &c) in p {
            let (a, b) = (exps[i - 1] as usize, exps[i] as usize);
            if a >= self.r || b >= self.r {
                return Err(Error::Internal("left_t applied to a non-reduced term".into()));
            }
            for &(a2, b2, t, k) in &self.swap[a * self.r + b] {
                let mut e2 = exps.clone();
                e2[i - 1] = a2;
                e2[i] = b2;
                let coeff = f.mul(c, k);
                if t {
                    buf.clear();
                    self.hecke_left(i, *u, coeff, &mut buf);
                    for &(v, d) in &buf {
                        add_to(f, &mut out, (e2.clone(), v), d);
                    }
                } else {
                    add_to(f, &mut out, (e2, *u), coeff);
                }
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Reduce every exponent below `r`.
    fn normalize(&mut self, p: Poly) -> Result<Poly> {
        let f = self.f;
        let mut out = Poly::new();
        let mut cur = p;
        while !cur.is_empty() {
            self.tick(cur.len())?;
            let mut next = Poly::new();
            for ((exps, u), c) in cur {
                if c == 0 {
                    continue;
                }
                match (0..self.n).rev().find(|&j| exps[j] as usize >= self.r) {
                    None => add_to(f, &mut out, (exps, u), c),
                    Some(j) => {
                        // L^β T_u = L^{β - r e_j} · NF(L_j^r) · T_u
                        let mut base = exps.clone();
                        base[j] -= self.r as u8;
                        let top: Vec<(Key, u32)> = self.top[j].iter().map(|(k, &v)| (k.clone(), v)).collect();
                        for ((g, v), k) in top {
                            let e2: Vec<u8> = base.iter().zip(&g).map(|(x, y)| x + y).collect();
                            let ck = f.mul(c, k);
                            for (z, h) in self.hecke(v, u) {
                                add_to(f, &mut next, (e2.clone(), z), f.mul(ck, h));
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    fn build_top_powers(&mut self, cyclotomic: &[u32]) -> Result<()> {
        let f = self.f;
        let (r, n) = (self.r, self.n);
        // ∏ (X - Q_k), low to high.
        let mut poly = vec![1u32];
        for &qk in cyclotomic {
            let mut next = vec![0u32; poly.len() + 1];
            for (d, &c) in poly.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(c, qk));
            }
            poly = next;
        }
        let mut l1 = Poly::new();
        for (m, &s) in poly.iter().take(r).enumerate() {
            let mut exps = vec![0u8; n];
            exps[0] = m as u8;
            add_to(f, &mut l1, (exps, 0), f.neg(s));
        }
        self.top.push(l1);
        for j in 1..n {
            // y^r = q^{-1} [ T NF(x^r) T + (q-1) Σ_{a=1}^{r-1} x^a y^{r-a} T ]
            let prev = self.top[j - 1].clone();
            let left = self.left_t(j, &prev)?;
            let left = self.normalize(left)?;
            let mut acc = Poly::new();
            let mut buf = Vec::new();
            for ((exps, u), c) in left {
                buf.clear();
                self.hecke_right(u, j, c, &mut buf);
                for &(v, d) in &buf {
                    add_to(f, &mut acc, (exps.clone(), v), d);
                }
            }
            let s_j = self.sym.right_simple(j, 0);
            for a in 1..r {
                let mut exps = vec![0u8; n];
                exps[j - 1] = a as u8;
                exps[j] = (r - a) as u8;
                add_to(f, &mut acc, (exps, s_j), self.qm1);
            }
            let scaled: Poly = acc.into_iter().map(|(k, c)| (k, f.mul(c, self.qinv))).collect();
            let reduced = self.normalize(scaled)?;
            if reduced.keys().any(|(e, _)| e.iter().any(|&x| x as usize >= r)) {
                return Err(Error::Internal(format!("normal form of L_{}^r is not reduced", j + 1)));
            }
            self.top.push(reduced);
        }
        Ok(())
    }

    /// `T_u · p`, applying the reduced word of `u` from the right.
    fn left_t_word(&mut self, u: usize, mut p: Poly) -> Result<Poly> {
        for &i in self.sym.reduced_word(u).iter().rev() {
            let next = self.left_t(i, &p)?;
            p = self.normalize(next)?;
        }
        Ok(p)
    }

    /// `L^c · p`.
    fn shift(&mut self, c: &[u8], p: Poly) -> Result<Poly> {
        let mut shifted = Poly::new();
        for ((e, u), x) in p {
            let e2 = e.iter().zip(c).map(|(a, b)| a + b).collect();
            add_to(self.f, &mut shifted, (e2, u), x);
        }
        self.normalize(shifted)
    }

    fn single(exps: Vec<u8>, u: usize) -> Poly {
        Poly::from([((exps, u), 1)])
    }

    fn unit_exps(&self, k: usize) -> Vec<u8> {
        let mut e = vec![0u8; self.n];
        e[k] = 1;
        e
    }
}

/// Result of replaying one defining relation on every basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

/// `H_n(q, Q)` with its normal-form basis and generator tables.
#[derive(Debug, Clone)]
pub struct AlgebraTable {
    params: AKParams,
    sym: SymmetricGroup,
    dim: usize,
    right_gen: Vec<SparseMap>,
    left_gen: Vec<SparseMap>,
    right_l: Vec<SparseMap>,
    star: SparseMap,
    plan: Vec<Step>,
    /// Independent products of sampled basis pairs, from full rewriting.
    rewrite_samples: Vec<(usize, usize, Vec<u32>)>,
}

/// Build with the default dimension cap.
pub fn build_algebra(params: &AKParams) -> Result<AlgebraTable> {
    AlgebraTable::build(params, DEFAULT_DIMENSION_CAP)
}

impl AlgebraTable {
    pub fn build(params: &AKParams, cap: usize) -> Result<Self> {
        let dim = params.dimension().filter(|&d| d <= cap).ok_or_else(|| {
            Error::ResourceCap(format!(
                "dimension r^n n! = {}^{} · {}! exceeds the cap {cap}",
                params.r(),
                params.n(),
                params.n()
            ))
        })?;
        let (r, n) = (params.r(), params.n());
        let sym = SymmetricGroup::new(n);
        let f = params.ctx().field();
        let mut rw = Rewriter::new(params, &sym)?;
        let nfact = sym.order();
        let key_of = |j: usize| -> Key {
            let mut c = j / nfact;
            let mut exps = vec![0u8; n];
            for e in exps.iter_mut() {
                *e = (c % r) as u8;
                c /= r;
            }
            (exps, j % nfact)
        };
        let index_of = |e: &[u8], w: usize| -> usize {
            let c = e.iter().rev().fold(0usize, |acc, &x| acc * r + x as usize);
            c * nfact + w
        };
        let to_dense = |p: &Poly| -> Vec<u32> {
            let mut v = vec![0u32; dim];
            for ((e, w), &c) in p {
                let j = index_of(e, *w);
                v[j] = f.add(v[j], c);
            }
            v
        };

        let mut right_gen = Vec::with_capacity(n);
        let mut left_gen = Vec::with_capacity(n);
        for g in 0..n {
            let mut rrows = Vec::with_capacity(dim);
            let mut lrows = Vec::with_capacity(dim);
            for j in 0..dim {
                let (exps, u) = key_of(j);
                let right = if g == 0 {
                    let p = rw.left_t_word(u, Rewriter::single(rw.unit_exps(0), 0))?;
                    rw.shift(&exps, p)?
                } else {
                    let mut buf = Vec::new();
                    rw.hecke_right(u, g, 1, &mut buf);
                    let mut p = Poly::new();
                    for (v, c) in buf {
                        add_to(f, &mut p, (exps.clone(), v), c);
                    }
                    p
                };
                rrows.push(to_dense(&right));
                let left = if g == 0 {
                    let mut e = exps.clone();
                    e[0] += 1;
                    rw.normalize(Rewriter::single(e, u))?
                } else {
                    let p = rw.left_t(g, &Rewriter::single(exps.clone(), u))?;
                    rw.normalize(p)?
                };
                lrows.push(to_dense(&left));
            }
            right_gen.push(SparseMap::from_dense_rows(rrows));
            left_gen.push(SparseMap::from_dense_rows(lrows));
        }

        let mut right_l = Vec::with_capacity(n);
        for k in 0..n {
            let mut rows = Vec::with_capacity(dim);
            for j in 0..dim {
                let (exps, u) = key_of(j);
                let p = rw.left_t_word(u, Rewriter::single(rw.unit_exps(k), 0))?;
                rows.push(to_dense(&rw.shift(&exps, p)?));
            }
            right_l.push(SparseMap::from_dense_rows(rows));
        }

        let mut plan = Vec::with_capacity(dim);
        for j in 0..dim {
            let (exps, u) = key_of(j);
            let step = if let Some(i) = sym.right_descent(u) {
                Step::T { prev: index_of(&exps, sym.right_simple(i, u)), i }
            } else if let Some(k) = exps.iter().position(|&x| x > 0) {
                let mut e = exps.clone();
                e[k] -= 1;
                Step::L { prev: index_of(&e, 0), k }
            } else {
                Step::Root
            };
            plan.push(step);
        }

        // A handful of products by full rewriting, kept as an independent oracle.
        let mut rewrite_samples = Vec::new();
        let stride = (dim / 7).max(1);
        for i in (0..dim).step_by(stride) {
            for j in (0..dim).step_by(stride) {
                let (c, w) = key_of(i);
                let (d, v) = key_of(j);
                let p = rw.left_t_word(w, Rewriter::single(d, 0))?;
                let p = rw.shift(&c, p)?;
                let mut out = Poly::new();
                for ((e, z), x) in p {
                    for (y, h) in rw.hecke(z, v) {
                        add_to(f, &mut out, (e.clone(), y), f.mul(x, h));
                    }
                }
                rewrite_samples.push((i, j, to_dense(&out)));
            }
        }
        log::debug!("rewriting used {} steps for dim {dim}", rw.steps);

        let mut table = Self {
            params: params.clone(),
            sym,
            dim,
            right_gen,
            left_gen,
            right_l,
            star: SparseMap { rows: Vec::new() },
            plan,
            rewrite_samples,
        };
        let mut star_rows = Vec::with_capacity(dim);
        for j in 0..dim {
            let (exps, u) = key_of(j);
            let mut v = vec![0u32; dim];
            v[index_of(&exps, 0)] = 1;
            for &i in table.sym.reduced_word(u) {
                v = table.left_gen[i].apply(f, &v);
            }
            star_rows.push(v);
        }
        table.star = SparseMap::from_dense_rows(star_rows);
        Ok(table)
    }

    pub fn params(&self) -> &AKParams {
        &self.params
    }

    pub fn field(&self) -> PrimeField {
        self.params.ctx().field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sym(&self) -> &SymmetricGroup {
        &self.sym
    }

    pub(crate) fn plan(&self) -> &[Step] {
        &self.plan
    }

    /// Exponents and permutation index of basis element `j`.
    pub fn basis_label(&self, j: usize) -> (Vec<u8>, usize) {
        let nfact = self.sym.order();
        let r = self.params.r();
        let mut c = j / nfact;
        let mut exps = vec![0u8; self.params.n()];
        for e in exps.iter_mut() {
            *e = (c % r) as u8;
            c /= r;
        }
        (exps, j % nfact)
    }

    pub fn basis_index(&self, exps: &[u8], w: usize) -> usize {
        let r = self.params.r();
        let c = exps.iter().rev().fold(0usize, |acc, &x| acc * r + x as usize);
        c * self.sym.order() + w
    }

    pub fn basis_vector(&self, j: usize) -> Vec<u32> {
        crate::linalg::unit(self.dim, j)
    }

    pub fn one(&self) -> Vec<u32> {
        self.basis_vector(0)
    }

    /// `T_w` as a vector.
    pub fn t_element(&self, w: usize) -> Vec<u32> {
        self.basis_vector(w)
    }

    /// `x · T_g`, `g ∈ 0..n`.
    pub fn right_gen(&self, g: usize, x: &[u32]) -> Vec<u32> {
        self.right_gen[g].apply(self.field(), x)
    }

    /// `T_g · x`.
    pub fn left_gen(&self, g: usize, x: &[u32]) -> Vec<u32> {
        self.left_gen[g].apply(self.field(), x)
    }

    /// `x · L_{k+1}`, `k ∈ 0..n`.
    pub fn right_l(&self, k: usize, x: &[u32]) -> Vec<u32> {
        self.right_l[k].apply(self.field(), x)
    }

    /// `x · T_w`.
    pub fn right_t_word(&self, x: &[u32], w: usize) -> Vec<u32> {
        let mut v = x.to_vec();
        for &i in self.sym.reduced_word(w) {
            v = self.right_gen(i, &v);
        }
        v
    }

    /// `T_w · x`.
    pub fn left_t_word(&self, w: usize, x: &[u32]) -> Vec<u32> {
        let mut v = x.to_vec();
        for &i in self.sym.reduced_word(w).iter().rev() {
            v = self.left_gen(i, &v);
        }
        v
    }

    /// `x · b_j` for every basis element `b_j`.
    pub fn right_products(&self, x: &[u32]) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::with_capacity(self.dim);
        for step in &self.plan {
            let v = match *step {
                Step::Root => x.to_vec(),
                Step::L { prev, k } => self.right_l(k, &out[prev]),
                Step::T { prev, i } => self.right_gen(i, &out[prev]),
            };
            out.push(v);
        }
        out
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0u32; self.dim];
        let mut cache: HashMap<usize, Vec<u32>> = HashMap::new();
        for (j, &c) in y.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let v = self.prefix_product(x, j, &mut cache);
            crate::linalg::axpy(f, &mut out, c, &v);
        }
        out
    }

    fn prefix_product(&self, x: &[u32], j: usize, cache: &mut HashMap<usize, Vec<u32>>) -> Vec<u32> {
        if let Some(v) = cache.get(&j) {
            return v.clone();
        }
        let v = match self.plan[j] {
            Step::Root => x.to_vec(),
            Step::L { prev, k } => {
                let p = self.prefix_product(x, prev, cache);
                self.right_l(k, &p)
            }
            Step::T { prev, i } => {
                let p = self.prefix_product(x, prev, cache);
                self.right_gen(i, &p)
            }
        };
        cache.insert(j, v.clone());
        v
    }

    /// The anti-automorphism fixing every generator.
    pub fn star(&self, x: &[u32]) -> Vec<u32> {
        self.star.apply(self.field(), x)
    }

    /// Coefficient of the identity word.
    pub fn trace(&self, x: &[u32]) -> u32 {
        x[0]
    }

    /// Right regular action of `T_g` as a matrix (rows are images).
    pub fn right_gen_matrix(&self, g: usize) -> Matrix {
        self.right_gen[g].to_matrix(self.field())
    }

    pub fn left_gen_matrix(&self, g: usize) -> Matrix {
        self.left_gen[g].to_matrix(self.field())
    }

    /// Basis pairs whose products were also computed by direct rewriting.
    pub fn rewrite_samples(&self) -> &[(usize, usize, Vec<u32>)] {
        &self.rewrite_samples
    }

    /// Replays the defining relations on every basis element under the
    /// right regular action.
    pub fn check_relations(&self) -> Vec<RelationCheck> {
        let f = self.field();
        let n = self.params.n();
        let q = self.params.ctx().q();
        let qs = self.params.cyclotomic();
        let all_vanish = |op: &dyn Fn(&[u32]) -> Vec<u32>| {
            (0..self.dim).all(|j| op(&self.basis_vector(j)).iter().all(|&c| c == 0))
        };
        let word = |x: &[u32], w: &[usize]| {
            let mut v = x.to_vec();
            for &g in w {
                v = self.right_gen(g, &v);
            }
            v
        };
        let diff = |a: Vec<u32>, b: Vec<u32>| -> Vec<u32> { a.iter().zip(&b).map(|(&x, &y)| f.sub(x, y)).collect() };
        let mut out = Vec::new();

        let h1 = all_vanish(&|x| {
            let mut v = x.to_vec();
            for &qk in &qs {
                let t = self.right_gen(0, &v);
                v = t.iter().zip(&v).map(|(&a, &b)| f.sub(a, f.mul(qk, b))).collect();
            }
            v
        });
        out.push(RelationCheck { name: "(T0-Q1)...(T0-Qr) = 0".into(), holds: h1 });
        if n >= 2 {
            let h2 = all_vanish(&|x| diff(word(x, &[0, 1, 0, 1]), word(x, &[1, 0, 1, 0])));
            out.push(RelationCheck { name: "T0 T1 T0 T1 = T1 T0 T1 T0".into(), holds: h2 });
        }
        for i in 1..n {
            let h3 = all_vanish(&|x| {
                let t = self.right_gen(i, x);
                let v: Vec<u32> = t.iter().zip(x).map(|(&a, &b)| f.add(a, b)).collect();
                let t2 = self.right_gen(i, &v);
                t2.iter().zip(&v).map(|(&a, &b)| f.sub(a, f.mul(q, b))).collect()
            });
            out.push(RelationCheck { name: format!("(T{i}+1)(T{i}-q) = 0"), holds: h3 });
        }
        for i in 1..n.saturating_sub(1) {
            let h4 = all_vanish(&|x| diff(word(x, &[i, i + 1, i]), word(x, &[i + 1, i, i + 1])));
            out.push(RelationCheck { name: format!("T{i} T{} T{i} = T{} T{i} T{}", i + 1, i + 1, i + 1), holds: h4 });
        }
        for i in 0..n {
            for j in i + 2..n {
                let h5 = all_vanish(&|x| diff(word(x, &[i, j]), word(x, &[j, i])));
                out.push(RelationCheck { name: format!("T{i} T{j} = T{j} T{i}"), holds: h5 });
            }
        }
        out
    }

    /// Every generator acts invertibly under right multiplication.
    pub fn generators_invertible(&self) -> bool {
        (0..self.params.n()).all(|g| self.right_gen_matrix(g).rank() == self.dim)
    }

    /// The normal-form words are linearly independent: the images of `1`
    /// under right multiplication by every basis word span the algebra.
    pub fn words_span(&self) -> bool {
        Matrix::from_rows(self.field(), self.dim, &self.right_products(&self.one()))
            .map(|m| m.rank() == self.dim)
            .unwrap_or(false)
    }
}
