//! The span of inner derivations D(e_i, e_j) of an LY algebra, in a
//! canonical reduced basis, with coordinates of every generator.

use super::anti::{num_pairs, pair_index, AntiAlg};
use super::ly::LYAlg;
use super::module::ModuleAction;
use super::span::OpSpan;
use crate::linalg::op::Op;
use crate::linalg::vector::{self, SpVec};

pub struct InnerSpan {
    n: usize,
    span: OpSpan,
    kappa: Vec<SpVec>,
}

fn row_op(row: &[(usize, SpVec)], n: usize) -> Op {
    let mut o: Op = vec![Vec::new(); n];
    for (k, col) in row {
        o[*k] = col.clone();
    }
    o
}

impl InnerSpan {
    pub fn from_ly(a: &LYAlg) -> InnerSpan {
        let n = a.dim();
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let gens = pairs.clone().filter(|&(i, j)| !a.ternary_upper(i, j).is_empty()).map(|(i, j)| row_op(a.ternary_upper(i, j), n));
        let mut span = OpSpan::new(gens, n);
        let mut kappa = vec![Vec::new(); num_pairs(n)];
        for (i, j) in pairs {
            let row = a.ternary_upper(i, j);
            if !row.is_empty() {
                kappa[pair_index(n, i, j)] = span.coords_unchecked(&row_op(row, n));
            }
        }
        InnerSpan { n, span, kappa }
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn space_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Op] {
        self.span.basis()
    }

    /// Coordinates of D(e_i, e_j), signs materialized.
    pub fn kappa(&self, i: usize, j: usize) -> SpVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.kappa[pair_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => vector::neg(&self.kappa[pair_index(self.n, j, i)]),
            std::cmp::Ordering::Equal => Vec::new(),
        }
    }

    pub(crate) fn kappa_upper(&self, i: usize, j: usize) -> &SpVec {
        &self.kappa[pair_index(self.n, i, j)]
    }

    /// Coordinates of an operator, or `None` if it is outside the span.
    pub fn coords(&mut self, o: &[SpVec]) -> Option<SpVec> {
        self.span.coords(o)
    }

    /// Commutator structure of the span, or the first basis pair whose
    /// commutator leaves it.
    pub fn structure(&mut self) -> Result<AntiAlg, (usize, usize)> {
        self.span.algebra("D")
    }

    /// The span as a Lie algebra with its tautological action.
    pub fn module(&mut self) -> Result<ModuleAction, (usize, usize)> {
        self.span.module("D")
    }
}
