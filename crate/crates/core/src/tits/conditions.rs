//! The three cyclic conditions under which T(X,Y) is a Lie algebra.
//!
//! Each condition is a sum Σ_s U_s(x₁,x₂,x₃) ⊗ V_s(y₁,y₂,y₃) over a few
//! slots s. It vanishes on all basis triples iff the row space of U (one
//! row per x-triple and output coordinate) is orthogonal to that of V. On
//! failure the triples are scanned in lexicographic order for a witness.

use rayon::prelude::*;

use crate::compjordan::TraceAdmissible;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, SpVec};
use crate::linalg::Echelon;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub name: &'static str,
    pub ok: bool,
    /// (x₁, x₂, x₃, y₁, y₂, y₃) as indices into the X₀ and Y₀ bases.
    pub witness: Option<[usize; 6]>,
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// The three cyclic rotations of a triple.
fn rotations(t: [usize; 3]) -> [[usize; 3]; 3] {
    [t, [t[1], t[2], t[0]], [t[2], t[0], t[1]]]
}

/// Slot values at one triple: `slots` tensors, each a sparse vector over
/// output coordinates.
type SlotValues = Vec<SpVec>;

/// Rows (one per output coordinate) of the slot matrix at one triple.
fn rows_of(vals: &SlotValues) -> Vec<SpVec> {
    let mut by_coord: std::collections::BTreeMap<usize, SpVec> = std::collections::BTreeMap::new();
    for (s, v) in vals.iter().enumerate() {
        for (c, x) in v {
            by_coord.entry(*c).or_default().push((s, x.clone()));
        }
    }
    by_coord.into_values().collect()
}

fn row_space(vals: &[SlotValues], slots: usize) -> Echelon {
    let mut e = Echelon::new(slots);
    for v in vals {
        for r in rows_of(v) {
            e.insert(&r);
            if e.rank() == slots {
                return e;
            }
        }
    }
    e
}

fn orthogonal(u: &mut Echelon, v: &mut Echelon) -> bool {
    let vr = v.rows().to_vec();
    u.rows().iter().all(|a| vr.iter().all(|b| vector::dot(a, b).is_zero()))
}

/// Σ_s u_s ⊗ v_s is nonzero.
fn pairing_nonzero(u: &SlotValues, v: &SlotValues) -> bool {
    let ru = rows_of(u);
    let rv = rows_of(v);
    ru.iter().any(|a| rv.iter().any(|b| !vector::dot(a, b).is_zero()))
}

fn evaluate(name: &'static str, xs: Vec<SlotValues>, ys: Vec<SlotValues>, nx: usize, ny: usize, slots: usize) -> ConditionResult {
    let mut u = row_space(&xs, slots);
    let mut v = row_space(&ys, slots);
    if orthogonal(&mut u, &mut v) {
        return ConditionResult { name, ok: true, witness: None };
    }
    let tx = triples(nx);
    let ty = triples(ny);
    let witness = tx.par_iter().enumerate().find_map_first(|(p, a)| {
        if xs[p].iter().all(|s| s.is_empty()) {
            return None;
        }
        ty.iter().enumerate().find(|(q, _)| pairing_nonzero(&xs[p], &ys[*q])).map(|(_, b)| [a[0], a[1], a[2], b[0], b[1], b[2]])
    });
    ConditionResult { name, ok: false, witness }
}

fn scalar(x: Rat) -> SpVec {
    if x.is_zero() {
        Vec::new()
    } else {
        vec![(0, x)]
    }
}

/// t((x₁*x₂)x₃).
fn t_star(v: &TraceAdmissible, t: [usize; 3]) -> Rat {
    v.t_of(&v.star[t[0]][t[1]], &vector::unit(t[2]))
}

/// D_{x₁*x₂, x₃} flattened.
fn d_star(v: &TraceAdmissible, t: [usize; 3]) -> SpVec {
    let n = v.dim0();
    op::flatten(&v.d_of(&v.star[t[0]][t[1]], &vector::unit(t[2])), n)
}

/// Conditions (i), (ii), (iii) on all basis triples of X₀ and Y₀.
pub fn check_tits_conditions(x: &TraceAdmissible, y: &TraceAdmissible) -> [ConditionResult; 3] {
    let (a, b) = (x.dim0(), y.dim0());
    let tx = triples(a);
    let ty = triples(b);
    // (i): Σ t((x₁*x₂)x₃) d_{y₁⋆y₂, y₃}
    let c1 = {
        let xs: Vec<SlotValues> = tx.par_iter().map(|t| rotations(*t).iter().map(|r| scalar(t_star(x, *r))).collect()).collect();
        let ys: Vec<SlotValues> = ty.par_iter().map(|t| rotations(*t).iter().map(|r| d_star(y, *r)).collect()).collect();
        evaluate("i", xs, ys, a, b, 3)
    };
    // (ii): Σ t((y₁⋆y₂)y₃) D_{x₁*x₂, x₃}
    let c2 = {
        let xs: Vec<SlotValues> = tx.par_iter().map(|t| rotations(*t).iter().map(|r| d_star(x, *r)).collect()).collect();
        let ys: Vec<SlotValues> = ty.par_iter().map(|t| rotations(*t).iter().map(|r| scalar(t_star(y, *r))).collect()).collect();
        evaluate("ii", xs, ys, a, b, 3)
    };
    // (iii): Σ D_{x₁,x₂}(x₃)⊗t(y₁y₂)y₃ + (x₁*x₂)*x₃⊗(y₁⋆y₂)⋆y₃ + t(x₁x₂)x₃⊗d_{y₁,y₂}(y₃)
    let c3 = {
        let dx: Vec<Vec<Op>> = (0..a).map(|i| (0..a).map(|k| x.d(i, k)).collect()).collect();
        let dy: Vec<Vec<Op>> = (0..b).map(|i| (0..b).map(|k| y.d(i, k)).collect()).collect();
        let xs: Vec<SlotValues> = tx
            .par_iter()
            .map(|t| {
                let mut s = Vec::with_capacity(9);
                for r in rotations(*t) {
                    s.push(dx[r[0]][r[1]][r[2]].clone());
                    s.push(x.star_of(&x.star[r[0]][r[1]], &vector::unit(r[2])));
                    s.push(vector::scale(&vector::unit(r[2]), &x.tprod[r[0]][r[1]]));
                }
                s
            })
            .collect();
        let ys: Vec<SlotValues> = ty
            .par_iter()
            .map(|t| {
                let mut s = Vec::with_capacity(9);
                for r in rotations(*t) {
                    s.push(vector::scale(&vector::unit(r[2]), &y.tprod[r[0]][r[1]]));
                    s.push(y.star_of(&y.star[r[0]][r[1]], &vector::unit(r[2])));
                    s.push(dy[r[0]][r[1]][r[2]].clone());
                }
                s
            })
            .collect();
        evaluate("iii", xs, ys, a, b, 9)
    };
    [c1, c2, c3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compjordan::{trace_admissible_view, Ingredient};

    fn view(s: &str) -> TraceAdmissible {
        trace_admissible_view(&Ingredient::parse(s).unwrap())
    }

    #[test]
    fn rows_group_by_coordinate() {
        let vals = vec![vec![(0, Rat::one()), (2, Rat::int(3))], vec![(2, Rat::int(5))]];
        assert_eq!(rows_of(&vals), vec![vec![(0, Rat::one())], vec![(0, Rat::int(3)), (1, Rat::int(5))]]);
    }

    #[test]
    fn form_jordan_pairs_pass() {
        for (p, q) in [("JV(3)", "JV(4)"), ("JV(2)", "JV(5)")] {
            let r = check_tits_conditions(&view(p), &view(q));
            assert!(r.iter().all(|c| c.ok), "{p},{q}: {r:?}");
        }
    }

    #[test]
    fn composition_with_degree_three_passes() {
        for (p, q) in [("Q", "H3(k)"), ("O", "H3(K)"), ("K", "H3(Q)")] {
            let r = check_tits_conditions(&view(p), &view(q));
            assert!(r.iter().all(|c| c.ok), "{p},{q}: {r:?}");
        }
    }

    #[test]
    fn degree_four_fails_with_witness() {
        let r = check_tits_conditions(&view("O"), &view("H4(K)"));
        let bad: Vec<_> = r.iter().filter(|c| !c.ok).collect();
        assert!(!bad.is_empty());
        assert!(bad.iter().all(|c| c.witness.is_some()));
    }
}
