//! Partitions, multipartitions, dominance and standard tableaux.
//!
//! Multipartitions have a text form used everywhere on the command line:
//! components joined by `|`, each component a comma-separated weakly
//! decreasing list, the empty component written `-`. For example
//! `3,3,2|2,1|1,1,1,1,1,1|2,2,1`, or `-|-` for the empty bipartition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default bound on `|λ|` for explicit tableau enumeration.
pub const TABLEAU_ENUMERATION_CAP: usize = 12;

/// A partition stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self((1..=width).map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32).collect())
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn standard_tableaux_count(&self) -> BigUint {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks = BigUint::from(1u32);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                hooks *= BigUint::from((arm + leg + 1) as u64);
            }
        }
        factorial(n) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A node `(row, column, component)`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

/// An r-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter("a multipartition needs at least one component".into()));
        }
        Ok(Self { components })
    }

    /// Build from nested part lists, e.g. `&[&[2], &[]]`.
    pub fn from_parts(parts: &[&[u32]]) -> Result<Self> {
        Self::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<_>>()?)
    }

    pub fn empty(r: usize) -> Self {
        Self { components: vec![Partition::empty(); r.max(1)] }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k]
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Reverse the component order and transpose each component.
    pub fn conjugate(&self) -> Self {
        Self { components: self.components.iter().rev().map(Partition::conjugate).collect() }
    }

    /// Nodes in row-reading order: component by component, row by row.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (k, comp) in self.components.iter().enumerate() {
            for (i, &len) in comp.parts().iter().enumerate() {
                for j in 1..=len as usize {
                    out.push(Node { row: i + 1, col: j, comp: k + 1 });
                }
            }
        }
        out
    }

    /// `|λ^(1)| + ... + |λ^(k)|` for `k` in `0..=r`.
    pub fn cumulative_sizes(&self) -> Vec<usize> {
        let mut acc = vec![0];
        for c in &self.components {
            acc.push(acc.last().unwrap() + c.size());
        }
        acc
    }

    /// `n_λ`: the number of standard λ-tableaux.
    pub fn standard_tableaux_count(&self) -> BigUint {
        let mut total = factorial(self.size());
        for c in &self.components {
            total /= factorial(c.size());
            total *= c.standard_tableaux_count();
        }
        total
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty multipartition string".into()));
        }
        let comps = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(comps)
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All r-partitions of `n`, each exactly once.
///
/// Ordered by the size vector of the components (first component largest
/// first), then by the components' parts in the order of [`enumerate_partitions`].
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<MultiPartition> {
    assert!(r >= 1, "r must be positive");
    fn rec(comp: usize, r: usize, rest: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if comp + 1 == r {
            for p in enumerate_partitions(rest) {
                prefix.push(p);
                out.push(MultiPartition { components: prefix.clone() });
                prefix.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in enumerate_partitions(size) {
                prefix.push(p);
                rec(comp + 1, r, rest - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, r, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance `λ ⊵ μ` on r-partitions of the same size.
pub fn dominates(lam: &MultiPartition, mu: &MultiPartition) -> Result<bool> {
    if lam.r() != mu.r() || lam.size() != mu.size() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare {lam} and {mu}: sizes or component counts differ"
        )));
    }
    let (mut base_l, mut base_m) = (0i64, 0i64);
    for (cl, cm) in lam.components.iter().zip(&mu.components) {
        let rows = cl.len().max(cm.len()).max(1);
        let (mut sl, mut sm) = (base_l, base_m);
        for j in 1..=rows {
            sl += cl.part(j) as i64;
            sm += cm.part(j) as i64;
            if sl < sm {
                return Ok(false);
            }
        }
        base_l += cl.size() as i64;
        base_m += cm.size() as i64;
    }
    Ok(true)
}

/// Strict dominance `λ ▷ μ`.
pub fn strictly_dominates(lam: &MultiPartition, mu: &MultiPartition) -> Result<bool> {
    Ok(lam != mu && dominates(lam, mu)?)
}

/// A standard tableau: one filling per component, rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<Vec<u32>>>,
}

impl StandardTableau {
    pub fn components(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    /// Entry at a 1-based node.
    pub fn entry(&self, node: Node) -> u32 {
        self.rows[node.comp - 1][node.row - 1][node.col - 1]
    }

    /// Entries read along rows, component by component.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    /// The tableau with `1..n` entered in row-reading order.
    pub fn superstandard(lam: &MultiPartition) -> Self {
        let mut next = 1;
        let rows = lam
            .components()
            .iter()
            .map(|c| {
                c.parts()
                    .iter()
                    .map(|&len| {
                        let row: Vec<u32> = (next..next + len).collect();
                        next += len;
                        row
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|comp| {
            comp.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
                && comp.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi))
        })
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "-".to_string()
                } else {
                    c.iter()
                        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join("/")
                }
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// `n_λ` for an r-partition.
pub fn count_standard_tableaux(lam: &MultiPartition) -> BigUint {
    lam.standard_tableaux_count()
}

/// All standard λ-tableaux, sorted by reading word. Refuses `|λ|` above
/// [`TABLEAU_ENUMERATION_CAP`].
pub fn enumerate_standard_tableaux(lam: &MultiPartition) -> Result<Vec<StandardTableau>> {
    enumerate_standard_tableaux_capped(lam, TABLEAU_ENUMERATION_CAP)
}

pub fn enumerate_standard_tableaux_capped(lam: &MultiPartition, cap: usize) -> Result<Vec<StandardTableau>> {
    let n = lam.size();
    if n > cap {
        return Err(Error::ResourceCap(format!("|λ| = {n} exceeds the enumeration cap {cap}")));
    }
    // Place n, n-1, ..., 1 by repeatedly removing removable nodes.
    let shape: Vec<Vec<u32>> = lam.components().iter().map(|c| c.parts().to_vec()).collect();
    let mut filling: Vec<Vec<Vec<u32>>> =
        shape.iter().map(|c| c.iter().map(|&l| vec![0; l as usize]).collect()).collect();
    let mut out = Vec::new();
    fn rec(shape: &mut Vec<Vec<u32>>, filling: &mut Vec<Vec<Vec<u32>>>, next: u32, out: &mut Vec<StandardTableau>) {
        if next == 0 {
            out.push(StandardTableau { rows: filling.clone() });
            return;
        }
        for k in 0..shape.len() {
            for i in 0..shape[k].len() {
                let len = shape[k][i];
                let below = shape[k].get(i + 1).copied().unwrap_or(0);
                if len == 0 || below >= len {
                    continue;
                }
                filling[k][i][len as usize - 1] = next;
                shape[k][i] -= 1;
                rec(shape, filling, next - 1, out);
                shape[k][i] += 1;
            }
        }
    }
    let mut sh = shape;
    rec(&mut sh, &mut filling, n as u32, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    Ok(out)
}
