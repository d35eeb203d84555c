//! The symmetric group S_n in one-line notation, with `(x∘y)(k) = x(y(k))`.
//!
//! Simple reflections are numbered `1..n`; `s_i` swaps `i-1` and `i` (0-based).

use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    length: Vec<usize>,
    left_simple: Vec<Vec<usize>>,
    right_simple: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    reduced_word: Vec<Vec<usize>>,
}

fn inversions(w: &[u8]) -> usize {
    let mut k = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                k += 1;
            }
        }
    }
    k
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    // Heap's algorithm would scramble order; plain recursion keeps it lexicographic.
    fn rec(k: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        let n = used.len();
        if k == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur[k] = v as u8;
                rec(k + 1, cur, used, out);
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    rec(0, &mut cur, &mut used, &mut out);
    out
}

impl SymmetricGroup {
    /// Elements are ordered by length, then lexicographically; index 0 is the identity.
    pub fn new(n: usize) -> Self {
        let mut elements = all_permutations(n);
        elements.sort_by_key(|w| (inversions(w), w.clone()));
        let index: HashMap<Vec<u8>, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let length = elements.iter().map(|w| inversions(w)).collect();
        let mut left_simple = vec![Vec::with_capacity(elements.len()); n.saturating_sub(1)];
        let mut right_simple = vec![Vec::with_capacity(elements.len()); n.saturating_sub(1)];
        for w in &elements {
            for i in 1..n {
                let mut l = w.clone();
                for v in l.iter_mut() {
                    if *v as usize == i - 1 {
                        *v = i as u8;
                    } else if *v as usize == i {
                        *v = (i - 1) as u8;
                    }
                }
                left_simple[i - 1].push(index[&l]);
                let mut r = w.clone();
                r.swap(i - 1, i);
                right_simple[i - 1].push(index[&r]);
            }
        }
        let inverse = elements
            .iter()
            .map(|w| {
                let mut inv = vec![0u8; n];
                for (k, &v) in w.iter().enumerate() {
                    inv[v as usize] = k as u8;
                }
                index[&inv]
            })
            .collect();
        let mut group = Self {
            n,
            elements,
            index,
            length,
            left_simple,
            right_simple,
            inverse,
            reduced_word: Vec::new(),
        };
        // Words are built in length order, so the shorter prefix is always ready.
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(group.order());
        for w in 0..group.order() {
            let word = match group.right_descent(w) {
                None => Vec::new(),
                Some(i) => {
                    let mut word = words[group.right_simple[i - 1][w]].clone();
                    word.push(i);
                    word
                }
            };
            words.push(word);
        }
        group.reduced_word = words;
        group
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: usize) -> &[u8] {
        &self.elements[w]
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w]
    }

    /// Index of `s_i ∘ w`.
    pub fn left_simple(&self, i: usize, w: usize) -> usize {
        self.left_simple[i - 1][w]
    }

    /// Index of `w ∘ s_i`.
    pub fn right_simple(&self, i: usize, w: usize) -> usize {
        self.right_simple[i - 1][w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn compose(&self, x: usize, y: usize) -> usize {
        let (x, y) = (&self.elements[x], &self.elements[y]);
        let z: Vec<u8> = y.iter().map(|&k| x[k as usize]).collect();
        self.index[&z]
    }

    /// `[i_1, ..., i_k]` with `w = s_{i_1} ∘ ... ∘ s_{i_k}` and `k = ℓ(w)`.
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.reduced_word[w]
    }

    /// Smallest `i` with `ℓ(w ∘ s_i) < ℓ(w)`.
    pub fn right_descent(&self, w: usize) -> Option<usize> {
        (1..self.n).find(|&i| self.length[self.right_simple[i - 1][w]] < self.length[w])
    }

    /// Permutations mapping every block of consecutive values to itself.
    /// `blocks` lists block sizes in order.
    pub fn young_subgroup(&self, blocks: &[usize]) -> Vec<usize> {
        let mut label = Vec::with_capacity(self.n);
        for (b, &size) in blocks.iter().enumerate() {
            label.extend(std::iter::repeat(b).take(size));
        }
        assert_eq!(label.len(), self.n, "block sizes must sum to the degree");
        (0..self.order())
            .filter(|&w| self.elements[w].iter().enumerate().all(|(k, &v)| label[k] == label[v as usize]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_lengths() {
        for n in 0..=5 {
            let g = SymmetricGroup::new(n);
            assert_eq!(g.order(), (1..=n).product::<usize>().max(1));
            assert_eq!(g.length(0), 0);
            let longest = g.order() - 1;
            assert_eq!(g.length(longest), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        let g = SymmetricGroup::new(4);
        for w in 0..g.order() {
            let word = g.reduced_word(w);
            assert_eq!(word.len(), g.length(w));
            let mut acc = 0;
            for &i in word {
                acc = g.right_simple(i, acc);
            }
            assert_eq!(acc, w);
        }
    }

    #[test]
    fn simple_actions_are_compositions() {
        let g = SymmetricGroup::new(4);
        let s: Vec<usize> = (1..4).map(|i| g.reduced_word.iter().position(|w| w == &vec![i]).unwrap()).collect();
        for w in 0..g.order() {
            assert_eq!(g.compose(w, g.inverse(w)), 0);
            for i in 1..4 {
                assert_eq!(g.left_simple(i, w), g.compose(s[i - 1], w));
                assert_eq!(g.right_simple(i, w), g.compose(w, s[i - 1]));
            }
        }
    }

    #[test]
    fn young_subgroup_orders() {
        let g = SymmetricGroup::new(5);
        assert_eq!(g.young_subgroup(&[2, 3]).len(), 12);
        assert_eq!(g.young_subgroup(&[1, 1, 1, 1, 1]), vec![0]);
        assert_eq!(g.young_subgroup(&[5]).len(), 120);
    }
}
