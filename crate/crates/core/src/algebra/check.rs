//! Identity checkers: Jacobi for anticommutative algebras and the six LY
//! axioms. Both scan basis tuples in lexicographic order and report the
//! least violating tuple; work is split across rayon workers by first index.

use rayon::prelude::*;

use super::anti::AntiAlg;
use super::inner::InnerSpan;
use super::ly::LYAlg;
use crate::linalg::op;
use crate::linalg::vector::{self, Accum, SpVec};
use crate::rat::{lcm_denoms, scaled_i64, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Vec<usize>,
    pub defect: SpVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieReport {
    pub ok: bool,
    pub violation: Option<Violation>,
}

/// Structure constants scaled to machine integers: entry = L * c.
struct IntTable {
    rows: Vec<Vec<(u32, i64)>>,
}

const SCALE_BOUND: i64 = 1 << 30;

impl IntTable {
    fn new<'a>(rows: impl Iterator<Item = &'a SpVec>, scale: &num_bigint::BigInt) -> Option<IntTable> {
        let mut out = Vec::new();
        for r in rows {
            let mut v = Vec::with_capacity(r.len());
            for (k, x) in r {
                v.push((*k as u32, scaled_i64(x, scale, SCALE_BOUND)?));
            }
            out.push(v);
        }
        Some(IntTable { rows: out })
    }
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    super::anti::pair_index(n, i, j)
}

fn jacobi_defect_int(a: &AntiAlg, t: &IntTable, i: usize, j: usize, k: usize, acc: &mut [i128], touched: &mut Vec<usize>) -> bool {
    let n = a.dim();
    let mut add = |lhs: &[(u32, i64)], z: usize, sign: i128, acc: &mut [i128]| {
        for (l, c) in lhs {
            let l = *l as usize;
            if l == z {
                continue;
            }
            let (row, s) = if l < z { (&t.rows[upper_index(n, l, z)], sign) } else { (&t.rows[upper_index(n, z, l)], -sign) };
            let c = *c as i128 * s;
            for (m, d) in row {
                let m = *m as usize;
                if acc[m] == 0 {
                    touched.push(m);
                }
                acc[m] += c * *d as i128;
            }
        }
    };
    add(&t.rows[upper_index(n, i, j)], k, 1, acc);
    add(&t.rows[upper_index(n, j, k)], i, 1, acc);
    add(&t.rows[upper_index(n, i, k)], j, -1, acc);
    let mut bad = false;
    for &m in touched.iter() {
        if acc[m] != 0 {
            bad = true;
        }
    }
    bad
}

fn jacobi_defect_rat(a: &AntiAlg, i: usize, j: usize, k: usize, acc: &mut Accum) -> SpVec {
    let mut add = |lhs: &SpVec, z: usize, sign: i32| {
        for (l, c) in lhs {
            a.with_bracket(*l, z, |s, row| {
                let c = if s * sign > 0 { c.clone() } else { -c };
                acc.add_scaled(&c, row)
            });
        }
    };
    add(a.upper(i, j), k, 1);
    add(a.upper(j, k), i, 1);
    add(a.upper(i, k), j, -1);
    acc.take()
}

fn scan_jacobi(a: &AntiAlg) -> LieReport {
    let n = a.dim();
    let scale = lcm_denoms(a.values());
    let table = IntTable::new(a.table().iter(), &scale);
    let found = (0..n).into_par_iter().find_map_first(|i| {
        let mut racc = Accum::new(n);
        let mut iacc = vec![0i128; n];
        let mut touched = Vec::new();
        for j in i + 1..n {
            for k in j + 1..n {
                if a.upper(i, j).is_empty() && a.upper(j, k).is_empty() && a.upper(i, k).is_empty() {
                    continue;
                }
                let bad = match &table {
                    Some(t) => {
                        let bad = jacobi_defect_int(a, t, i, j, k, &mut iacc, &mut touched);
                        for &m in &touched {
                            iacc[m] = 0;
                        }
                        touched.clear();
                        bad
                    }
                    None => !jacobi_defect_rat(a, i, j, k, &mut racc).is_empty(),
                };
                if bad {
                    let defect = jacobi_defect_rat(a, i, j, k, &mut racc);
                    return Some(Violation { tuple: vec![i, j, k], defect });
                }
            }
        }
        None
    });
    LieReport { ok: found.is_none(), violation: found }
}

/// Jacobi identity on all basis triples i < j < k.
pub fn check_lie(a: &AntiAlg) -> LieReport {
    let r = scan_jacobi(a);
    let _ = a.lie_cache().set(r.ok);
    r
}

/// Cached Jacobi verdict.
pub fn is_lie(a: &AntiAlg) -> bool {
    *a.lie_cache().get_or_init(|| scan_jacobi(a).ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: &'static str,
    pub ok: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyReport {
    pub axioms: Vec<AxiomResult>,
    /// Dimension of the span of inner derivations.
    pub inner_dim: usize,
}

impl LyReport {
    pub fn ok(&self) -> bool {
        self.axioms.iter().all(|a| a.ok)
    }

    pub fn axiom(&self, name: &str) -> &AxiomResult {
        self.axioms.iter().find(|a| a.name == name).expect("known axiom")
    }
}

fn result(name: &'static str, v: Option<Violation>) -> AxiomResult {
    AxiomResult { name, ok: v.is_none(), violation: v }
}

fn ly3_defect(a: &LYAlg, i: usize, j: usize, k: usize, acc: &mut Accum) -> SpVec {
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        acc.add_scaled(&Rat::one(), &a.ternary(x, y, z));
        for (l, c) in a.binary(x, y) {
            acc.add_scaled(&c, &a.binary(l, z));
        }
    }
    acc.take()
}

fn ly4_defect(a: &LYAlg, span: &InnerSpan, i: usize, j: usize, k: usize, acc: &mut Accum) -> SpVec {
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        for (l, c) in a.binary(x, y) {
            acc.add_scaled(&c, &span.kappa(l, z));
        }
    }
    acc.take()
}

fn first_triple(n: usize, f: impl Fn(usize, usize, usize, &mut Accum) -> SpVec + Sync, width: usize) -> Option<Violation> {
    (0..n).into_par_iter().find_map_first(|i| {
        let mut acc = Accum::new(width);
        for j in i + 1..n {
            for k in j + 1..n {
                let d = f(i, j, k, &mut acc);
                if !d.is_empty() {
                    return Some(Violation { tuple: vec![i, j, k], defect: d });
                }
            }
        }
        None
    })
}

/// LY5 on the pair (x, y) = (e_i, e_j): first (u, v) with u < v violating it.
fn ly5_pair(a: &LYAlg, i: usize, j: usize) -> Option<Violation> {
    let n = a.dim();
    let d = a.d_cols(&vector::unit(i), &vector::unit(j));
    for u in 0..n {
        for v in u + 1..n {
            let lhs = op::apply(&d, a.binary_upper(u, v), n);
            let rhs = vector::add(&a.prod(&d[u], &vector::unit(v)), &a.prod(&vector::unit(u), &d[v]));
            let defect = vector::sub(&lhs, &rhs);
            if !defect.is_empty() {
                return Some(Violation { tuple: vec![i, j, u, v], defect });
            }
        }
    }
    None
}

/// LY6 on the pair (x, y) = (e_i, e_j): first (u, v, w) violating it.
fn ly6_pair(a: &LYAlg, i: usize, j: usize) -> Option<Violation> {
    let n = a.dim();
    let d = a.d_cols(&vector::unit(i), &vector::unit(j));
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            for w in 0..n {
                let (eu, ev, ew) = (vector::unit(u), vector::unit(v), vector::unit(w));
                let lhs = op::apply(&d, &a.triple(&eu, &ev, &ew), n);
                let mut rhs = a.triple(&d[u], &ev, &ew);
                rhs = vector::add(&rhs, &a.triple(&eu, &d[v], &ew));
                rhs = vector::add(&rhs, &a.triple(&eu, &ev, &d[w]));
                let defect = vector::sub(&lhs, &rhs);
                if !defect.is_empty() {
                    return Some(Violation { tuple: vec![i, j, u, v, w], defect });
                }
            }
        }
    }
    None
}

fn first_pair(n: usize, f: impl Fn(usize, usize) -> Option<Violation> + Sync) -> Option<Violation> {
    (0..n).into_par_iter().find_map_first(|i| (i + 1..n).find_map(|j| f(i, j)))
}

/// LY5 for every basis operator of the span: B_s(u·v) = B_s(u)·v + u·B_s(v).
fn ly5_holds(a: &LYAlg, span: &InnerSpan) -> bool {
    let n = a.dim();
    if a.is_binary_zero() {
        return true;
    }
    span.basis().par_iter().all(|b| {
        for u in 0..n {
            for v in u + 1..n {
                let lhs = op::apply(b, a.binary_upper(u, v), n);
                let rhs = vector::add(&a.prod(&b[u], &vector::unit(v)), &a.prod(&vector::unit(u), &b[v]));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    })
}

/// LY6 in coordinates: the span is closed, and for each basis operator B,
/// [B, D(a, b)] = D(Ba, b) + D(a, Bb) on every pair a < b.
fn ly6_holds(a: &LYAlg, span: &mut InnerSpan) -> bool {
    let n = a.dim();
    let Ok(d) = span.structure() else {
        return false;
    };
    let r = span.dim();
    let span = &*span;
    (0..r).into_par_iter().all(|s| {
        let b = &span.basis()[s];
        let mut acc = Accum::new(r);
        for x in 0..n {
            for y in x + 1..n {
                for (t, c) in span.kappa_upper(x, y) {
                    d.with_bracket(s, *t, |sg, f| acc.add_scaled(&if sg > 0 { c.clone() } else { -c }, f));
                }
                for (z, c) in &b[x] {
                    acc.add_scaled(&-c, &span.kappa(*z, y));
                }
                for (z, c) in &b[y] {
                    acc.add_scaled(&-c, &span.kappa(x, *z));
                }
                if !acc.take().is_empty() {
                    return false;
                }
            }
        }
        true
    })
}

/// Evaluate LY1–LY6 on basis tuples. LY1 and LY2 hold by the storage
/// format; LY3 and LY4 are scanned on triples; LY5 and LY6 are decided in
/// coordinates of the inner-derivation span and, on failure, rescanned on
/// basis tuples to locate the least violating tuple.
pub fn check_ly(a: &LYAlg) -> LyReport {
    let n = a.dim();
    let mut span = InnerSpan::from_ly(a);
    let ly3 = first_triple(n, |i, j, k, acc| ly3_defect(a, i, j, k, acc), n);
    let ly4 = {
        let sp = &span;
        first_triple(n, |i, j, k, acc| ly4_defect(a, sp, i, j, k, acc), sp.dim().max(1))
    };
    let ly5 = if ly5_holds(a, &span) { None } else { first_pair(n, |i, j| ly5_pair(a, i, j)) };
    let ly6 = if ly6_holds(a, &mut span) { None } else { first_pair(n, |i, j| ly6_pair(a, i, j)) };
    LyReport {
        axioms: vec![
            result("LY1", None),
            result("LY2", None),
            result("LY3", ly3),
            result("LY4", ly4),
            result("LY5", ly5),
            result("LY6", ly6),
        ],
        inner_dim: span.dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::sl2;

    #[test]
    fn sl2_is_lie() {
        assert!(check_lie(&sl2()).ok);
    }

    #[test]
    fn corrupted_sl2_reports_triple() {
        let mut a = sl2();
        a.set(0, 2, vec![(0, Rat::one()), (1, Rat::one())]);
        let r = check_lie(&a);
        assert!(!r.ok);
        assert_eq!(r.violation.unwrap().tuple, vec![0, 1, 2]);
    }

    #[test]
    fn lie_algebra_is_ly() {
        let r = check_ly(&LYAlg::from_lie(&sl2()));
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.inner_dim, 0);
    }

    #[test]
    fn adjoint_lts_is_ly() {
        let g = sl2();
        let l = LYAlg::from_fns(3, g.labels().to_vec(), |_, _| Vec::new(), |i, j, k| g.bracket(&g.get(i, j), &vector::unit(k)));
        let r = check_ly(&l);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.inner_dim, 3);
    }

    #[test]
    fn adjoint_variant_ii_passes() {
        let g = sl2();
        let l = LYAlg::from_fns(3, g.labels().to_vec(), |i, j| g.get(i, j), |i, j, k| vector::scale(&g.bracket(&g.get(i, j), &vector::unit(k)), &Rat::int(3)));
        assert!(check_ly(&l).ok());
    }

    #[test]
    fn stray_ternary_constant_fails() {
        let g = sl2();
        let l = LYAlg::from_fns(3, g.labels().to_vec(), |i, j| g.get(i, j), |i, j, k| if (i, j, k) == (0, 1, 0) { vec![(1, Rat::one())] } else { Vec::new() });
        assert!(!check_ly(&l).ok());
    }
}
