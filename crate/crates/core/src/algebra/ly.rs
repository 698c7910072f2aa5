//! Lie–Yamaguti candidates: a binary product and a ternary product, both
//! stored once per pair i < j in the first two arguments.

use super::anti::{num_pairs, pair_index, AntiAlg};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LYAlg {
    dim: usize,
    labels: Vec<String>,
    binary: Vec<SpVec>,
    /// Per pair (i < j): sorted list of (k, [e_i, e_j, e_k]).
    ternary: Vec<Vec<(usize, SpVec)>>,
}

impl LYAlg {
    pub fn zero(dim: usize, labels: Vec<String>) -> LYAlg {
        assert_eq!(labels.len(), dim, "label count must equal dim");
        let p = num_pairs(dim);
        LYAlg { dim, labels, binary: vec![Vec::new(); p], ternary: vec![Vec::new(); p] }
    }

    /// Lie algebra viewed as an LY algebra with zero ternary product.
    pub fn from_lie(a: &AntiAlg) -> LYAlg {
        let mut l = LYAlg::zero(a.dim(), a.labels().to_vec());
        for (i, j, v) in a.entries() {
            l.set_binary(i, j, v.clone());
        }
        l
    }

    /// Build from closures evaluated on i < j (and all k).
    pub fn from_fns(
        dim: usize,
        labels: Vec<String>,
        mut bin: impl FnMut(usize, usize) -> SpVec,
        mut ter: impl FnMut(usize, usize, usize) -> SpVec,
    ) -> LYAlg {
        let mut l = LYAlg::zero(dim, labels);
        for i in 0..dim {
            for j in i + 1..dim {
                let p = pair_index(dim, i, j);
                l.binary[p] = bin(i, j);
                l.ternary[p] = (0..dim).map(|k| (k, ter(i, j, k))).filter(|e| !e.1.is_empty()).collect();
            }
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_binary(&mut self, i: usize, j: usize, v: SpVec) {
        assert!(i != j, "x·x is zero by anticommutativity");
        if i < j {
            self.binary[pair_index(self.dim, i, j)] = v;
        } else {
            self.binary[pair_index(self.dim, j, i)] = vector::neg(&v);
        }
    }

    pub fn set_ternary(&mut self, i: usize, j: usize, k: usize, v: SpVec) {
        assert!(i != j, "[x,x,z] is zero by antisymmetry");
        let (p, v) = if i < j {
            (pair_index(self.dim, i, j), v)
        } else {
            (pair_index(self.dim, j, i), vector::neg(&v))
        };
        let row = &mut self.ternary[p];
        match row.binary_search_by_key(&k, |e| e.0) {
            Ok(pos) => {
                if v.is_empty() {
                    row.remove(pos);
                } else {
                    row[pos].1 = v;
                }
            }
            Err(pos) => {
                if !v.is_empty() {
                    row.insert(pos, (k, v));
                }
            }
        }
    }

    pub fn binary_upper(&self, i: usize, j: usize) -> &SpVec {
        &self.binary[pair_index(self.dim, i, j)]
    }

    /// D(e_i, e_j) for i < j as a sparse list of columns (k, image of e_k).
    pub fn ternary_upper(&self, i: usize, j: usize) -> &[(usize, SpVec)] {
        &self.ternary[pair_index(self.dim, i, j)]
    }

    pub fn binary(&self, i: usize, j: usize) -> SpVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.binary_upper(i, j).clone(),
            std::cmp::Ordering::Greater => vector::neg(self.binary_upper(j, i)),
            std::cmp::Ordering::Equal => Vec::new(),
        }
    }

    pub fn ternary(&self, i: usize, j: usize, k: usize) -> SpVec {
        let (row, neg) = match i.cmp(&j) {
            std::cmp::Ordering::Less => (self.ternary_upper(i, j), false),
            std::cmp::Ordering::Greater => (self.ternary_upper(j, i), true),
            std::cmp::Ordering::Equal => return Vec::new(),
        };
        match row.binary_search_by_key(&k, |e| e.0) {
            Ok(p) if neg => vector::neg(&row[p].1),
            Ok(p) => row[p].1.clone(),
            Err(_) => Vec::new(),
        }
    }

    pub fn is_binary_zero(&self) -> bool {
        self.binary.iter().all(|v| v.is_empty())
    }

    pub fn is_ternary_zero(&self) -> bool {
        self.ternary.iter().all(|v| v.is_empty())
    }

    pub fn prod(&self, x: &SpVec, y: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim);
        for (i, a) in x {
            for (j, b) in y {
                if i < j {
                    acc.add_scaled(&(a * b), self.binary_upper(*i, *j));
                } else if i > j {
                    acc.add_scaled(&-(a * b), self.binary_upper(*j, *i));
                }
            }
        }
        acc.take()
    }

    pub fn triple(&self, x: &SpVec, y: &SpVec, z: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim);
        for (i, a) in x {
            for (j, b) in y {
                let (row, s) = match i.cmp(j) {
                    std::cmp::Ordering::Less => (self.ternary_upper(*i, *j), a * b),
                    std::cmp::Ordering::Greater => (self.ternary_upper(*j, *i), -(a * b)),
                    std::cmp::Ordering::Equal => continue,
                };
                for (k, c) in z {
                    if let Ok(p) = row.binary_search_by_key(k, |e| e.0) {
                        acc.add_scaled(&(&s * c), &row[p].1);
                    }
                }
            }
        }
        acc.take()
    }

    /// The operator D(x, y) = [x, y, ·] as columns over the basis.
    pub fn d_cols(&self, x: &SpVec, y: &SpVec) -> Vec<SpVec> {
        (0..self.dim).map(|k| self.triple(x, y, &vector::unit(k))).collect()
    }

    pub fn binary_values(&self) -> impl Iterator<Item = &Rat> {
        self.binary.iter().flat_map(|v| v.iter().map(|e| &e.1))
    }

    pub fn ternary_values(&self) -> impl Iterator<Item = &Rat> {
        self.ternary.iter().flat_map(|r| r.iter().flat_map(|(_, v)| v.iter().map(|e| &e.1)))
    }

    /// The binary product as an anticommutative algebra.
    pub fn binary_alg(&self) -> AntiAlg {
        AntiAlg::from_fn(self.dim, self.labels.clone(), |i, j| self.binary_upper(i, j).clone())
    }

    /// Image under the linear map with matrix columns `cols` (column k is the
    /// image of e_k): the unique structure on the target making the map an
    /// isomorphism. `inv` must be the inverse map.
    pub fn transport(&self, cols: &[SpVec], inv: &[SpVec], labels: Vec<String>) -> LYAlg {
        let n = self.dim;
        let apply = |m: &[SpVec], v: &SpVec| {
            let mut acc = Accum::new(n);
            for (k, x) in v {
                acc.add_scaled(x, &m[*k]);
            }
            acc.take()
        };
        LYAlg::from_fns(
            n,
            labels,
            |i, j| apply(cols, &self.prod(&inv[i], &inv[j])),
            |i, j, k| apply(cols, &self.triple(&inv[i], &inv[j], &inv[k])),
        )
    }
}
