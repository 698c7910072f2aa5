//! Anticommutative algebras by sparse structure constants stored for i < j.

use std::sync::OnceLock;

use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::Mat;
use crate::rat::Rat;

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub(crate) fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug)]
pub struct AntiAlg {
    dim: usize,
    labels: Vec<String>,
    table: Vec<SpVec>,
    lie: OnceLock<bool>,
}

impl Clone for AntiAlg {
    fn clone(&self) -> Self {
        AntiAlg { dim: self.dim, labels: self.labels.clone(), table: self.table.clone(), lie: self.lie.clone() }
    }
}

impl PartialEq for AntiAlg {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim && self.labels == o.labels && self.table == o.table
    }
}

impl Eq for AntiAlg {}

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl AntiAlg {
    pub fn zero(dim: usize, labels: Vec<String>) -> AntiAlg {
        assert_eq!(labels.len(), dim, "label count must equal dim");
        AntiAlg { dim, labels, table: vec![Vec::new(); num_pairs(dim)], lie: OnceLock::new() }
    }

    /// Build from `f(i, j)` evaluated for i < j.
    pub fn from_fn(dim: usize, labels: Vec<String>, mut f: impl FnMut(usize, usize) -> SpVec) -> AntiAlg {
        let mut a = AntiAlg::zero(dim, labels);
        for i in 0..dim {
            for j in i + 1..dim {
                a.table[pair_index(dim, i, j)] = f(i, j);
            }
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sets [e_i, e_j] = v (and implicitly [e_j, e_i] = -v).
    pub fn set(&mut self, i: usize, j: usize, v: SpVec) {
        assert!(i != j, "[e_i, e_i] is zero by anticommutativity");
        self.lie = OnceLock::new();
        if i < j {
            self.table[pair_index(self.dim, i, j)] = v;
        } else {
            self.table[pair_index(self.dim, j, i)] = vector::neg(&v);
        }
    }

    /// Stored [e_i, e_j] for i < j.
    pub fn upper(&self, i: usize, j: usize) -> &SpVec {
        &self.table[pair_index(self.dim, i, j)]
    }

    /// [e_i, e_j] with sign materialized.
    pub fn get(&self, i: usize, j: usize) -> SpVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper(i, j).clone(),
            std::cmp::Ordering::Greater => vector::neg(self.upper(j, i)),
            std::cmp::Ordering::Equal => Vec::new(),
        }
    }

    /// Calls `f(sign, &[e_min, e_max])` for [e_i, e_j] = sign * stored.
    #[inline]
    pub fn with_bracket<R>(&self, i: usize, j: usize, f: impl FnOnce(i32, &SpVec) -> R) -> Option<R> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some(f(1, self.upper(i, j))),
            std::cmp::Ordering::Greater => Some(f(-1, self.upper(j, i))),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Nonzero stored entries (i < j).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SpVec)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.upper(i, j))).filter(|e| !e.2.is_empty())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.is_empty())
    }

    pub fn bracket(&self, x: &SpVec, y: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim);
        for (i, a) in x {
            for (j, b) in y {
                self.with_bracket(*i, *j, |s, v| {
                    let c = if s > 0 { a * b } else { -(a * b) };
                    acc.add_scaled(&c, v)
                });
            }
        }
        acc.take()
    }

    /// Columns of ad_x: column k is [x, e_k].
    pub fn ad_cols(&self, x: &SpVec) -> Vec<SpVec> {
        (0..self.dim).map(|k| self.bracket(x, &vector::unit(k))).collect()
    }

    pub fn ad(&self, x: &SpVec) -> Mat {
        Mat::from_sparse_cols(self.dim, &self.ad_cols(x))
    }

    pub fn direct_sum(&self, o: &AntiAlg) -> AntiAlg {
        let n = self.dim + o.dim;
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        let mut a = AntiAlg::zero(n, labels);
        for (i, j, v) in self.entries() {
            a.set(i, j, v.clone());
        }
        for (i, j, v) in o.entries() {
            let sh: SpVec = v.iter().map(|(k, x)| (k + self.dim, x.clone())).collect();
            a.set(i + self.dim, j + self.dim, sh);
        }
        a
    }

    /// Relabel basis: new basis element `perm[i]` is old element `i`.
    pub fn permute(&self, perm: &[usize]) -> AntiAlg {
        let n = self.dim;
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
        }
        let mut a = AntiAlg::zero(n, labels);
        for (i, j, v) in self.entries() {
            let w = vector::collect(v.iter().map(|(k, x)| (perm[*k], x.clone())).collect());
            a.set(perm[i], perm[j], w);
        }
        a
    }

    /// The structure on a subspace spanned by `basis` (columns in the ambient
    /// basis). Returns `None` if the subspace is not closed.
    pub fn restrict(&self, basis: &[SpVec], labels: Vec<String>) -> Option<AntiAlg> {
        let mut bc = crate::linalg::echelon::BasisCoords::new(basis, self.dim)?;
        let r = basis.len();
        let mut a = AntiAlg::zero(r, labels);
        for i in 0..r {
            for j in i + 1..r {
                let v = self.bracket(&basis[i], &basis[j]);
                a.table[pair_index(r, i, j)] = bc.coords(&v)?;
            }
        }
        Some(a)
    }

    /// First basis pair (i, j) where the linear map e_k ↦ cols[k] fails
    /// f([e_i, e_j]) = [f(e_i), f(e_j)] into `target`.
    pub fn homomorphism_violation(&self, target: &AntiAlg, cols: &[SpVec]) -> Option<(usize, usize)> {
        assert_eq!(cols.len(), self.dim);
        let n = self.dim;
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
            let mut acc = Accum::new(target.dim);
            for (k, c) in self.upper(i, j) {
                acc.add_scaled(c, &cols[*k]);
            }
            acc.take() != target.bracket(&cols[i], &cols[j])
        })
    }

    pub(crate) fn table(&self) -> &[SpVec] {
        &self.table
    }

    pub(crate) fn lie_cache(&self) -> &OnceLock<bool> {
        &self.lie
    }

    /// Every denominator and numerator in the table.
    pub fn values(&self) -> impl Iterator<Item = &Rat> {
        self.table.iter().flat_map(|v| v.iter().map(|e| &e.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::sl2;

    #[test]
    fn pair_index_is_bijective() {
        let n = 7;
        let mut seen = vec![false; num_pairs(n)];
        for i in 0..n {
            for j in i + 1..n {
                let p = pair_index(n, i, j);
                assert!(!seen[p]);
                seen[p] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn brackets_materialize_signs() {
        let a = sl2();
        // basis e, h, f
        assert_eq!(a.get(1, 0), vec![(0, Rat::int(2))]);
        assert_eq!(a.get(0, 1), vec![(0, Rat::int(-2))]);
        assert!(a.get(2, 2).is_empty());
        let x = vec![(0, Rat::one()), (2, Rat::one())];
        let y = vec![(1, Rat::one())];
        assert_eq!(a.bracket(&x, &y), vec![(0, Rat::int(-2)), (2, Rat::int(2))]);
    }
}
