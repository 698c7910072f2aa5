//! Spans of operators closed under commutators, realized as Lie algebras.

use super::anti::AntiAlg;
use super::module::ModuleAction;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::SpVec;
use crate::linalg::Echelon;

/// A span of operators on an n-dimensional space in reduced basis.
pub struct OpSpan {
    n: usize,
    ech: Echelon,
    basis: Vec<Op>,
}

impl OpSpan {
    pub fn new(ops: impl IntoIterator<Item = Op>, n: usize) -> OpSpan {
        let mut ech = Echelon::new(n * n);
        for o in ops {
            ech.insert(&op::flatten(&o, n));
        }
        let basis = ech.rows().iter().map(|r| op::unflatten(r, n)).collect();
        OpSpan { n, ech, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Op] {
        &self.basis
    }

    pub fn coords(&mut self, o: &[SpVec]) -> Option<SpVec> {
        self.ech.coords(&op::flatten(o, self.n))
    }

    /// Coordinates read off pivots; exact for members of the span.
    pub fn coords_unchecked(&mut self, o: &[SpVec]) -> SpVec {
        self.ech.coords_unchecked(&op::flatten(o, self.n))
    }

    /// Commutator structure, or the first basis pair leaving the span.
    pub fn algebra(&mut self, prefix: &str) -> Result<AntiAlg, (usize, usize)> {
        let r = self.dim();
        let labels = (0..r).map(|s| format!("{prefix}{s}")).collect();
        let mut d = AntiAlg::zero(r, labels);
        for s in 0..r {
            for t in s + 1..r {
                let c = op::commutator(&self.basis[s], &self.basis[t], self.n);
                match self.coords(&c) {
                    Some(v) => d.set(s, t, v),
                    None => return Err((s, t)),
                }
            }
        }
        Ok(d)
    }

    pub fn module(&mut self, prefix: &str) -> Result<ModuleAction, (usize, usize)> {
        let d = self.algebra(prefix)?;
        Ok(ModuleAction::new(d, self.n, self.basis.clone()))
    }
}

pub fn span_algebra(ops: Vec<Op>, n: usize) -> Result<ModuleAction, (usize, usize)> {
    OpSpan::new(ops, n).module("d")
}
