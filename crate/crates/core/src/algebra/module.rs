//! Representations of a Lie algebra on a finite-dimensional space.

use super::anti::AntiAlg;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::SpVec;
use crate::linalg::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub algebra: AntiAlg,
    pub space_dim: usize,
    /// One operator per algebra basis element, stored by columns.
    pub action: Vec<Op>,
}

impl ModuleAction {
    pub fn new(algebra: AntiAlg, space_dim: usize, action: Vec<Op>) -> ModuleAction {
        assert_eq!(algebra.dim(), action.len(), "one operator per basis element");
        ModuleAction { algebra, space_dim, action }
    }

    pub fn from_mats(algebra: AntiAlg, mats: &[Mat]) -> ModuleAction {
        let n = mats.first().map_or(0, |m| m.rows());
        ModuleAction::new(algebra, n, mats.iter().map(op::from_mat).collect())
    }

    pub fn matrix(&self, s: usize) -> Mat {
        op::to_mat(&self.action[s], self.space_dim)
    }

    pub fn apply(&self, s: usize, v: &SpVec) -> SpVec {
        op::apply(&self.action[s], v, self.space_dim)
    }

    /// ρ of an arbitrary algebra element.
    pub fn rho(&self, x: &SpVec) -> Op {
        op::combine(&self.action, x, self.space_dim)
    }

    /// First basis pair (s, t) with ρ([e_s, e_t]) ≠ [ρ(e_s), ρ(e_t)].
    pub fn homomorphism_violation(&self) -> Option<(usize, usize)> {
        let n = self.space_dim;
        for s in 0..self.algebra.dim() {
            for t in s + 1..self.algebra.dim() {
                let lhs = self.rho(self.algebra.upper(s, t));
                let rhs = op::commutator(&self.action[s], &self.action[t], n);
                if lhs != rhs {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// The adjoint representation.
    pub fn adjoint(a: &AntiAlg) -> ModuleAction {
        let action = (0..a.dim()).map(|s| a.ad_cols(&crate::linalg::vector::unit(s))).collect();
        ModuleAction::new(a.clone(), a.dim(), action)
    }

    /// Direct sum of two modules of the same algebra.
    pub fn direct_sum(&self, o: &ModuleAction) -> ModuleAction {
        assert_eq!(self.algebra, o.algebra);
        let n = self.space_dim;
        let action = self
            .action
            .iter()
            .zip(&o.action)
            .map(|(a, b)| {
                let mut cols = a.clone();
                cols.extend(b.iter().map(|c| c.iter().map(|(l, x)| (l + n, x.clone())).collect()));
                cols
            })
            .collect();
        ModuleAction::new(self.algebra.clone(), n + o.space_dim, action)
    }
}
