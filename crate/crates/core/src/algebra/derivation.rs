//! Derivation algebras of multilinear products.
//!
//! Unknowns are the entries D_{mk}. The Leibniz system is homogeneous for the
//! grading by weights of the diagonal derivations, so unknowns split into
//! independent blocks indexed by weight differences.

use std::collections::HashMap;

use super::anti::AntiAlg;
use super::ly::LYAlg;
use super::module::ModuleAction;
use super::span::span_algebra;
use crate::linalg::op::Op;
use crate::linalg::vector::SpVec;
use crate::linalg::Echelon;
use crate::rat::Rat;

/// A multilinear product given by its nonzero values on basis tuples.
#[derive(Clone, Debug, Default)]
pub struct Product {
    pub arity: usize,
    pub entries: HashMap<Vec<usize>, SpVec>,
}

impl Product {
    pub fn new(arity: usize) -> Product {
        Product { arity, entries: HashMap::new() }
    }

    pub fn insert(&mut self, args: Vec<usize>, v: SpVec) {
        debug_assert_eq!(args.len(), self.arity);
        if !v.is_empty() {
            self.entries.insert(args, v);
        }
    }

    pub fn binary_of(a: &AntiAlg) -> Product {
        let mut p = Product::new(2);
        for (i, j, v) in a.entries() {
            p.insert(vec![i, j], v.clone());
            p.insert(vec![j, i], crate::linalg::vector::neg(v));
        }
        p
    }

    fn sorted_entries(&self) -> Vec<(&Vec<usize>, &SpVec)> {
        let mut e: Vec<_> = self.entries.iter().collect();
        e.sort_by(|a, b| a.0.cmp(b.0));
        e
    }
}

/// Weights of the basis under the diagonal derivations of all products.
pub fn diagonal_weights(n: usize, products: &[Product]) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new(n);
    for p in products {
        for (args, out) in p.sorted_entries() {
            for (k, _) in out {
                let mut eq: Vec<(usize, Rat)> = vec![(*k, Rat::one())];
                for a in args {
                    eq.push((*a, Rat::int(-1)));
                }
                let eq = crate::linalg::vector::collect(eq);
                if !eq.is_empty() {
                    e.insert(&eq);
                }
            }
        }
    }
    let basis = e.null_space();
    let mut w = vec![Vec::with_capacity(basis.len()); n];
    for d in &basis {
        let dense = crate::linalg::vector::to_dense(d, n);
        for (k, x) in dense.into_iter().enumerate() {
            w[k].push(x);
        }
    }
    w
}

fn diff(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Basis of the derivations of the given products, as operators.
pub fn derivations(n: usize, products: &[Product]) -> Vec<Op> {
    let w = diagonal_weights(n, products);
    // unknown (m, k) -> (block, local index)
    let mut block_of: HashMap<Vec<Rat>, usize> = HashMap::new();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut local = vec![(0usize, 0usize); n * n];
    for m in 0..n {
        for k in 0..n {
            let key = diff(&w[m], &w[k]);
            let next = blocks.len();
            let b = *block_of.entry(key).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            local[m * n + k] = (b, blocks[b].len());
            blocks[b].push((m, k));
        }
    }
    let mut ech: Vec<Echelon> = blocks.iter().map(|b| Echelon::new(b.len())).collect();
    let mut push = |eqs: HashMap<(Vec<usize>, usize), Vec<((usize, usize), Rat)>>| {
        let mut keys: Vec<_> = eqs.keys().cloned().collect();
        keys.sort();
        for key in keys {
            let mut per_block: HashMap<usize, Vec<(usize, Rat)>> = HashMap::new();
            for ((m, k), x) in &eqs[&key] {
                let (b, l) = local[m * n + k];
                per_block.entry(b).or_default().push((l, x.clone()));
            }
            let mut bs: Vec<_> = per_block.into_iter().collect();
            bs.sort_by_key(|e| e.0);
            for (b, terms) in bs {
                let eq = crate::linalg::vector::collect(terms);
                if !eq.is_empty() {
                    ech[b].insert(&eq);
                }
            }
        }
    };
    for p in products {
        // equation (args, m): Σ_k c^k D_{mk} − Σ_pos Σ_l D_{l,args[pos]} c^m(args[pos ← l])
        let mut eqs: HashMap<(Vec<usize>, usize), Vec<((usize, usize), Rat)>> = HashMap::new();
        for (args, out) in p.sorted_entries() {
            for (k, c) in out {
                for m in 0..n {
                    eqs.entry((args.clone(), m)).or_default().push(((m, *k), c.clone()));
                }
            }
            for pos in 0..p.arity {
                let l = args[pos];
                for i in 0..n {
                    let mut t = args.clone();
                    t[pos] = i;
                    for (m, c) in out {
                        eqs.entry((t.clone(), *m)).or_default().push(((l, i), -c));
                    }
                }
            }
        }
        push(eqs);
    }
    let mut ops = Vec::new();
    for (b, e) in ech.iter_mut().enumerate() {
        for v in e.null_space() {
            let mut op: Op = vec![Vec::new(); n];
            for (l, x) in v {
                let (m, k) = blocks[b][l];
                op[k].push((m, x));
            }
            for col in op.iter_mut() {
                col.sort_by_key(|e| e.0);
            }
            ops.push(op);
        }
    }
    ops
}

/// The derivation algebra with its defining action.
pub fn derivation_algebra(n: usize, products: &[Product]) -> ModuleAction {
    let ops = derivations(n, products);
    span_algebra(ops, n).expect("derivations form a Lie algebra")
}

pub fn derivation_algebra_anti(a: &AntiAlg) -> ModuleAction {
    derivation_algebra(a.dim(), &[Product::binary_of(a)])
}

/// Derivations of both products of an LY algebra.
pub fn derivation_algebra_ly(a: &LYAlg) -> ModuleAction {
    let n = a.dim();
    let mut bin = Product::new(2);
    let mut ter = Product::new(3);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            bin.insert(vec![i, j], a.binary(i, j));
            for k in 0..n {
                ter.insert(vec![i, j, k], a.ternary(i, j, k));
            }
        }
    }
    derivation_algebra(n, &[bin, ter])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::sl2;

    #[test]
    fn derivations_of_sl2_are_inner() {
        assert_eq!(derivation_algebra_anti(&sl2()).algebra.dim(), 3);
    }

    #[test]
    fn one_dim_idempotent_has_none() {
        let mut p = Product::new(2);
        p.insert(vec![0, 0], vec![(0, Rat::one())]);
        assert!(derivations(1, &[p]).is_empty());
    }
}
