//! Commutants of module actions, centroids, and simplicity.
//!
//! The unknown endomorphism φ must commute with every ρ(x) whose matrix is
//! diagonal, so only entries φ_{ab} with equal diagonal weights can be
//! nonzero. On weight-adapted bases this cuts the unknowns from n² to
//! roughly n.

use std::collections::HashMap;

use super::anti::AntiAlg;
use super::check::is_lie;
use super::killing::is_semisimple_unchecked;
use super::module::ModuleAction;
use crate::linalg::op;
use crate::linalg::vector::{self, SpVec};
use crate::linalg::{Echelon, Mat};
use crate::rat::Rat;

/// Basis of {x : ρ(x) is diagonal}.
pub fn diagonal_elements(act: &ModuleAction) -> Vec<SpVec> {
    let r = act.action.len();
    let mut eqs: HashMap<(usize, usize), SpVec> = HashMap::new();
    for (s, o) in act.action.iter().enumerate() {
        for (k, col) in o.iter().enumerate() {
            for (m, x) in col {
                if *m != k {
                    eqs.entry((k, *m)).or_default().push((s, x.clone()));
                }
            }
        }
    }
    let mut keys: Vec<_> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let mut e = Echelon::new(r);
    for key in keys {
        e.insert(&eqs[&key]);
        if e.rank() == r {
            break;
        }
    }
    e.null_space()
}

/// Diagonal weights: entry [a][h] is the eigenvalue of ρ(diag[h]) on e_a.
fn weights(act: &ModuleAction, diag: &[SpVec]) -> Vec<Vec<Rat>> {
    let n = act.space_dim;
    let mut w = vec![Vec::with_capacity(diag.len()); n];
    for d in diag {
        let o = act.rho(d);
        let dv = op::diagonal(&o).expect("diagonal element");
        for (a, x) in dv.into_iter().enumerate() {
            w[a].push(x);
        }
    }
    w
}

struct Unknowns {
    index: HashMap<(usize, usize), usize>,
    list: Vec<(usize, usize)>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

fn unknowns(act: &ModuleAction) -> Unknowns {
    let n = act.space_dim;
    let diag = diagonal_elements(act);
    let w = weights(act, &diag);
    let mut class_id: HashMap<&Vec<Rat>, usize> = HashMap::new();
    let mut class_of = vec![0; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        let next = classes.len();
        let c = *class_id.entry(&w[a]).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(a);
        class_of[a] = c;
    }
    let mut index = HashMap::new();
    let mut list = Vec::new();
    for a in 0..n {
        for &b in &classes[class_of[a]] {
            index.insert((a, b), list.len());
            list.push((a, b));
        }
    }
    Unknowns { index, list, class_of, classes }
}

/// Equations φρ_s − ρ_sφ = 0, fed column by column until `stop` says so.
fn commutant_system(act: &ModuleAction, u: &Unknowns, stop_at: Option<usize>) -> Echelon {
    let n = act.space_dim;
    let mut e = Echelon::new(u.list.len());
    let mut rows: HashMap<usize, Vec<(usize, Rat)>> = HashMap::new();
    for o in &act.action {
        for b in 0..n {
            // (φρ)(a,b) = Σ_c φ_{ac} ρ[c,b]
            for (c, x) in &o[b] {
                for &a in &u.classes[u.class_of[*c]] {
                    rows.entry(a).or_default().push((u.index[&(a, *c)], x.clone()));
                }
            }
            // −(ρφ)(a,b) = −Σ_c ρ[a,c] φ_{cb}
            for &c in &u.classes[u.class_of[b]] {
                for (a, x) in &o[c] {
                    rows.entry(*a).or_default().push((u.index[&(c, b)], -x));
                }
            }
            let mut keys: Vec<usize> = rows.keys().copied().collect();
            keys.sort_unstable();
            for a in keys {
                let eq = vector::collect(rows.remove(&a).unwrap());
                if !eq.is_empty() {
                    e.insert(&eq);
                }
            }
            if stop_at.is_some_and(|s| e.rank() >= s) {
                return e;
            }
        }
    }
    e
}

/// Dimension of the commutant of the action.
pub fn commutant_dim(act: &ModuleAction) -> usize {
    let u = unknowns(act);
    if u.list.is_empty() {
        return 0;
    }
    // the identity always commutes
    let e = commutant_system(act, &u, Some(u.list.len() - 1));
    e.nullity()
}

/// Basis of the commutant as matrices.
pub fn commutant_basis(act: &ModuleAction) -> Vec<Mat> {
    let n = act.space_dim;
    let u = unknowns(act);
    let mut e = commutant_system(act, &u, None);
    e.null_space()
        .into_iter()
        .map(|v| {
            let mut m = Mat::zeros(n, n);
            for (i, x) in v {
                let (a, b) = u.list[i];
                m.set(a, b, x);
            }
            m
        })
        .collect()
}

/// A proper invariant subspace, found as an eigenspace of a non-scalar
/// commutant element with a rational eigenvalue.
pub fn invariant_subspace(act: &ModuleAction) -> Option<Vec<SpVec>> {
    let n = act.space_dim;
    for m in commutant_basis(act) {
        let scalar = m.is_diagonal() && (0..n).all(|i| m.get(i, i) == m.get(0, 0));
        if scalar {
            continue;
        }
        let poly = crate::linalg::poly::char_poly(&m);
        for root in crate::linalg::poly::rational_roots(&poly) {
            let shifted = m.sub(&Mat::identity(n).scale(&root));
            let ker = crate::linalg::kernel_basis(&shifted);
            if !ker.is_empty() && ker.len() < n {
                return Some(ker.iter().map(|v| vector::from_dense(v)).collect());
            }
        }
    }
    None
}

/// Centroid of an anticommutative algebra: the commutant of its adjoint action.
pub fn centroid_dim(a: &AntiAlg) -> usize {
    commutant_dim(&ModuleAction::adjoint(a))
}

pub fn is_simple(a: &AntiAlg) -> bool {
    a.dim() >= 1 && is_lie(a) && is_simple_unchecked(a)
}

/// Simplicity for a structure already known to be Lie.
pub fn is_simple_unchecked(a: &AntiAlg) -> bool {
    !a.is_abelian() && is_semisimple_unchecked(a) && centroid_dim(a) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::{natural_sl2, sl2};

    #[test]
    fn centroid_counts_ideals() {
        let s = sl2();
        assert_eq!(centroid_dim(&s), 1);
        assert_eq!(centroid_dim(&s.direct_sum(&s)), 2);
        assert!(is_simple(&s));
        assert!(!is_simple(&s.direct_sum(&s)));
    }

    #[test]
    fn commutant_of_natural_module() {
        let v = natural_sl2();
        assert_eq!(commutant_dim(&v), 1);
        let vv = v.direct_sum(&v);
        assert_eq!(commutant_dim(&vv), 4);
        let w = invariant_subspace(&vv).expect("reducible");
        assert!(!w.is_empty() && w.len() < 4);
    }
}
