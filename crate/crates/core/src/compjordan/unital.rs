//! Unital algebras given by full multiplication tables.

use crate::algebra::derivation::{derivation_algebra, Product};
use crate::algebra::ModuleAction;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, Accum, SpVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalAlg {
    dim: usize,
    labels: Vec<String>,
    /// table[i][j] = e_i e_j
    table: Vec<Vec<SpVec>>,
}

impl UnitalAlg {
    pub fn new(labels: Vec<String>, table: Vec<Vec<SpVec>>) -> UnitalAlg {
        let dim = labels.len();
        assert_eq!(table.len(), dim);
        UnitalAlg { dim, labels, table }
    }

    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> SpVec) -> UnitalAlg {
        let n = labels.len();
        let table = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        UnitalAlg::new(labels, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SpVec {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &SpVec, y: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim);
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(&(a * b), &self.table[*i][*j]);
            }
        }
        acc.take()
    }

    /// L_x: y ↦ xy.
    pub fn left_op(&self, x: &SpVec) -> Op {
        (0..self.dim).map(|k| self.mul(x, &vector::unit(k))).collect()
    }

    /// R_x: y ↦ yx.
    pub fn right_op(&self, x: &SpVec) -> Op {
        (0..self.dim).map(|k| self.mul(&vector::unit(k), x)).collect()
    }

    pub fn commutator(&self, x: &SpVec, y: &SpVec) -> SpVec {
        vector::sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// (x, y, z) = (xy)z − x(yz).
    pub fn associator(&self, x: &SpVec, y: &SpVec, z: &SpVec) -> SpVec {
        vector::sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    /// Index of the unit element if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        (0..self.dim).find(|&u| (0..self.dim).all(|k| self.table[u][k] == vector::unit(k) && self.table[k][u] == vector::unit(k)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// First basis triple with a nonzero associator.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (vector::unit(i), vector::unit(j), vector::unit(k));
                    if !self.associator(&x, &y, &z).is_empty() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis triple violating the linearized Jordan identity
    /// [R_a, R_{bc}] + [R_b, R_{ca}] + [R_c, R_{ab}] = 0.
    pub fn jordan_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let r: Vec<Op> = (0..n).map(|i| self.right_op(&vector::unit(i))).collect();
        let rprod: Vec<Vec<Op>> = (0..n).map(|i| (0..n).map(|j| if j < i { Vec::new() } else { self.right_op(&self.table[i][j]) }).collect()).collect();
        let rp = |i: usize, j: usize| if i <= j { &rprod[i][j] } else { &rprod[j][i] };
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let t1 = op::commutator(&r[a], rp(b, c), n);
                    let t2 = op::commutator(&r[b], rp(c, a), n);
                    let t3 = op::commutator(&r[c], rp(a, b), n);
                    if (0..n).any(|k| !vector::add(&vector::add(&t1[k], &t2[k]), &t3[k]).is_empty()) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &[SpVec]) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = op::apply(d, &self.table[i][j], n);
                let rhs = vector::add(&self.mul(&d[i], &vector::unit(j)), &self.mul(&vector::unit(i), &d[j]));
                lhs == rhs
            })
        })
    }

    pub fn derivation_algebra(&self) -> ModuleAction {
        let mut p = Product::new(2);
        for i in 0..self.dim {
            for j in 0..self.dim {
                p.insert(vec![i, j], self.table[i][j].clone());
            }
        }
        derivation_algebra(self.dim, &[p])
    }
}
