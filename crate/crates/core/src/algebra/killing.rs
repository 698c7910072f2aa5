//! Killing form, Cartan's criterion, and the Killing radical.

use std::collections::HashMap;

use super::anti::AntiAlg;
use super::check::{check_lie, is_lie};
use super::error::AlgError;
use crate::linalg::vector::SpVec;
use crate::linalg::{BilinForm, Echelon, Mat};
use crate::rat::Rat;

/// Gram matrix tr(ad e_i ad e_j) without verifying Jacobi.
pub fn killing_gram(a: &AntiAlg) -> Mat {
    let n = a.dim();
    // (l, k) -> [(i, c^k_{il})]
    let mut idx: HashMap<(u32, u32), Vec<(u32, Rat)>> = HashMap::new();
    for (i, l, v) in a.entries() {
        for (k, c) in v {
            idx.entry((l as u32, *k as u32)).or_default().push((i as u32, c.clone()));
            idx.entry((i as u32, *k as u32)).or_default().push((l as u32, -c));
        }
    }
    let mut g = Mat::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            a.with_bracket(j, k, |s, v| {
                for (l, c1) in v {
                    let c1 = if s > 0 { c1.clone() } else { -c1 };
                    if let Some(list) = idx.get(&(*l as u32, k as u32)) {
                        for (i, c2) in list {
                            g.add_at(*i as usize, j, &(&c1 * c2));
                        }
                    }
                }
            });
        }
    }
    g
}

pub fn killing_form(a: &AntiAlg) -> Result<BilinForm, AlgError> {
    if !is_lie(a) {
        let v = check_lie(a).violation.map(|v| v.tuple).unwrap_or_default();
        return Err(AlgError::NotLie(v));
    }
    Ok(BilinForm::new(killing_gram(a), 1).expect("Killing form is symmetric"))
}

fn sparse_rows(m: &Mat) -> Vec<SpVec> {
    (0..m.rows()).map(|i| m.sparse_row(i)).collect()
}

pub fn gram_rank(m: &Mat) -> usize {
    let mut e = Echelon::new(m.cols());
    for r in sparse_rows(m) {
        e.insert(&r);
    }
    e.rank()
}

/// Cartan's criterion on a structure already known to be Lie.
pub fn is_semisimple_unchecked(a: &AntiAlg) -> bool {
    a.dim() == 0 || gram_rank(&killing_gram(a)) == a.dim()
}

pub fn is_semisimple(a: &AntiAlg) -> bool {
    is_lie(a) && is_semisimple_unchecked(a)
}

/// Radical of the Killing form.
pub fn killing_radical(a: &AntiAlg) -> Vec<SpVec> {
    let g = killing_gram(a);
    let mut e = Echelon::new(a.dim());
    for r in sparse_rows(&g) {
        e.insert(&r);
    }
    e.null_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::{sl2, solvable2};

    #[test]
    fn sl2_gram() {
        let g = killing_gram(&sl2());
        // basis e, h, f
        assert_eq!(g.get(1, 1), &Rat::int(8));
        assert_eq!(g.get(0, 2), &Rat::int(4));
        assert_eq!(g.get(0, 0), &Rat::zero());
        assert!(is_semisimple(&sl2()));
    }

    #[test]
    fn solvable_is_degenerate() {
        assert!(!is_semisimple(&solvable2()));
        assert_eq!(killing_radical(&solvable2()).len(), 1);
    }
}
