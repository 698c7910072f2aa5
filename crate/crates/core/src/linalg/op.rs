//! Linear operators stored as sparse columns: `cols[k]` is the image of e_k.

use super::vector::{Accum, SpVec};
use super::Mat;
use crate::rat::Rat;

pub type Op = Vec<SpVec>;

pub fn apply(op: &[SpVec], v: &SpVec, n: usize) -> SpVec {
    let mut acc = Accum::new(n);
    for (k, x) in v {
        acc.add_scaled(x, &op[*k]);
    }
    acc.take()
}

pub fn apply_acc(op: &[SpVec], v: &SpVec, acc: &mut Accum) -> SpVec {
    for (k, x) in v {
        acc.add_scaled(x, &op[*k]);
    }
    acc.take()
}

/// a ∘ b
pub fn compose(a: &[SpVec], b: &[SpVec], n: usize) -> Op {
    let mut acc = Accum::new(n);
    b.iter().map(|col| apply_acc(a, col, &mut acc)).collect()
}

/// a ∘ b − b ∘ a
pub fn commutator(a: &[SpVec], b: &[SpVec], n: usize) -> Op {
    let mut acc = Accum::new(n);
    (0..a.len())
        .map(|k| {
            for (l, x) in &b[k] {
                acc.add_scaled(x, &a[*l]);
            }
            for (l, x) in &a[k] {
                acc.add_scaled(&-x, &b[*l]);
            }
            acc.take()
        })
        .collect()
}

/// Column-major flattening: entry (l, k) goes to index k*n + l.
pub fn flatten(op: &[SpVec], n: usize) -> SpVec {
    let mut out = Vec::new();
    for (k, col) in op.iter().enumerate() {
        for (l, x) in col {
            out.push((k * n + l, x.clone()));
        }
    }
    out
}

pub fn unflatten(v: &SpVec, n: usize) -> Op {
    let mut cols: Op = vec![Vec::new(); n];
    for (idx, x) in v {
        cols[idx / n].push((idx % n, x.clone()));
    }
    cols
}

/// Linear combination Σ c_s ops[s].
pub fn combine(ops: &[Op], coefs: &SpVec, n: usize) -> Op {
    let mut acc = Accum::new(n);
    (0..n)
        .map(|k| {
            for (s, c) in coefs {
                acc.add_scaled(c, &ops[*s][k]);
            }
            acc.take()
        })
        .collect()
}

pub fn to_mat(op: &[SpVec], n: usize) -> Mat {
    Mat::from_sparse_cols(n, op)
}

pub fn from_mat(m: &Mat) -> Op {
    (0..m.cols()).map(|k| m.sparse_col(k)).collect()
}

pub fn is_zero(op: &[SpVec]) -> bool {
    op.iter().all(|c| c.is_empty())
}

pub fn trace(op: &[SpVec]) -> Rat {
    op.iter().enumerate().map(|(k, c)| super::vector::get(c, k)).sum()
}

/// Diagonal entries if the operator is diagonal.
pub fn diagonal(op: &[SpVec]) -> Option<Vec<Rat>> {
    op.iter()
        .enumerate()
        .map(|(k, c)| match c.as_slice() {
            [] => Some(Rat::zero()),
            [(l, x)] if *l == k => Some(x.clone()),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_matches_dense() {
        let a = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let b = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        let c = commutator(&from_mat(&a), &from_mat(&b), 2);
        assert_eq!(to_mat(&c, 2), a.commutator(&b));
        assert_eq!(unflatten(&flatten(&c, 2), 2), c);
        assert_eq!(diagonal(&c), Some(vec![Rat::one(), Rat::int(-1)]));
    }
}
