//! Lie brackets on h ⊕ m extending a given h-module m, as combinations of
//! candidate bilinear maps m × m → h ⊕ m.
//!
//! Skew-symmetry and h-equivariance (checked on a generating set of h) are
//! linear in the coefficients; Jacobi on m × m × m is quadratic and goes to
//! the polynomial solver. Jacobi rows are drawn from basis triples in a
//! fixed strided order until the row space is stable, and each resulting
//! family is certified by check_lie on a grid of points large enough to
//! make the Jacobi defect vanish identically; otherwise every triple is used.

use super::construction::{DerSpan, TitsAlgebra};
use crate::algebra::{check_lie, AlgError, AntiAlg, ModuleAction};
use crate::compjordan::{build_composition, build_jordan, trace_admissible_view, CompKind, Ingredient, JordanKind};
use crate::linalg::polysys::{solve_system, MPoly, SolveOptions};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::{BilinForm, Echelon};
use crate::matrix::{build_matrix_lie, phi_map, MatrixLieSpec};
use crate::rat::Rat;
use crate::tits::build_tits;

/// A bilinear map m × m → h ⊕ m on basis pairs; targets are h coordinates
/// followed by m coordinates.
#[derive(Clone, Debug)]
pub struct BilinearMap {
    pub name: String,
    m_dim: usize,
    table: Vec<SpVec>,
}

impl BilinearMap {
    pub fn from_fn(name: impl Into<String>, m_dim: usize, mut f: impl FnMut(usize, usize) -> SpVec) -> BilinearMap {
        let mut table = Vec::with_capacity(m_dim * m_dim);
        for i in 0..m_dim {
            for j in 0..m_dim {
                table.push(f(i, j));
            }
        }
        BilinearMap { name: name.into(), m_dim, table }
    }

    pub fn at(&self, i: usize, j: usize) -> &SpVec {
        &self.table[i * self.m_dim + j]
    }

    fn combine(maps: &[BilinearMap], coeffs: &SpVec) -> BilinearMap {
        let m = maps[0].m_dim;
        let n = maps[0].table.len();
        let width = maps.iter().flat_map(|b| b.table.iter().flat_map(|v| v.iter().map(|e| e.0 + 1))).max().unwrap_or(0);
        let mut acc = Accum::new(width);
        let mut table = Vec::with_capacity(n);
        for p in 0..n {
            for (s, c) in coeffs {
                acc.add_scaled(c, &maps[*s].table[p]);
            }
            table.push(acc.take());
        }
        BilinearMap { name: String::new(), m_dim: m, table }
    }
}

/// An h-module m with candidate brackets.
#[derive(Clone, Debug)]
pub struct BracketProblem {
    pub module: ModuleAction,
    pub candidates: Vec<BilinearMap>,
}

impl BracketProblem {
    pub fn h_dim(&self) -> usize {
        self.module.algebra.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.module.space_dim
    }

    /// h ⊕ m with [m, m] = Σ c_s C_s; Jacobi is not assumed.
    pub fn assemble(&self, coeffs: &[Rat]) -> AntiAlg {
        let (hd, md) = (self.h_dim(), self.m_dim());
        let h = &self.module.algebra;
        let mut labels = h.labels().to_vec();
        labels.extend((0..md).map(|i| format!("m{i}")));
        let mut g = AntiAlg::zero(hd + md, labels);
        for (s, t, v) in h.entries() {
            g.set(s, t, v.clone());
        }
        for s in 0..hd {
            for (i, col) in self.module.action[s].iter().enumerate() {
                if !col.is_empty() {
                    g.set(s, hd + i, shift(col, hd));
                }
            }
        }
        let sparse: SpVec = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        if !sparse.is_empty() {
            let b = BilinearMap::combine(&self.candidates, &sparse);
            for i in 0..md {
                for j in i + 1..md {
                    let v = b.at(i, j);
                    if !v.is_empty() {
                        g.set(hd + i, hd + j, v.clone());
                    }
                }
            }
        }
        g
    }
}

fn shift(v: &SpVec, by: usize) -> SpVec {
    v.iter().map(|(i, x)| (i + by, x.clone())).collect()
}

/// A family of brackets: candidate coefficients as polynomials in the
/// free parameters.
#[derive(Clone, Debug)]
pub struct BracketFamily {
    pub coefficients: Vec<MPoly>,
    pub free: Vec<usize>,
    pub normalized: bool,
    /// Every member verified by check_lie on a determining grid.
    pub certified: bool,
}

impl BracketFamily {
    pub fn dim(&self) -> usize {
        self.free.len() + usize::from(self.normalized)
    }

    pub fn at(&self, free_values: &[Rat]) -> Vec<Rat> {
        let n = self.coefficients.first().map_or(0, MPoly::nvars);
        let mut x = vec![Rat::zero(); n];
        for (v, c) in self.free.iter().zip(free_values) {
            x[*v] = c.clone();
        }
        self.coefficients.iter().map(|p| p.eval(&x)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct EquivariantSolution {
    /// Dimension of the skew, h-equivariant span of the candidates.
    pub linear_dim: usize,
    /// Nonzero families.
    pub families: Vec<BracketFamily>,
    pub unresolved: usize,
    pub irrational: usize,
    /// Basis triples of m whose Jacobi rows were used.
    pub triples_used: usize,
}

impl EquivariantSolution {
    pub fn dimension(&self) -> Option<usize> {
        self.families.iter().map(BracketFamily::dim).max()
    }
}

/// Basis indices of h generating it as a Lie algebra, greedily.
fn generating_set(h: &AntiAlg) -> Vec<usize> {
    let n = h.dim();
    let mut gens = Vec::new();
    let mut span = Echelon::new(n);
    let mut basis: Vec<SpVec> = Vec::new();
    for k in 0..n {
        if span.rank() == n {
            break;
        }
        if span.reduce(&vector::unit(k)).is_empty() {
            continue;
        }
        gens.push(k);
        let mut queue = vec![vector::unit(k)];
        span.insert(&vector::unit(k));
        basis.push(vector::unit(k));
        while let Some(x) = queue.pop() {
            let current = basis.clone();
            for y in &current {
                let z = h.bracket(&x, y);
                if !z.is_empty() && span.insert(&z) {
                    basis.push(z.clone());
                    queue.push(z);
                }
            }
        }
    }
    gens
}

/// Rows for the linear constraints: skew-symmetry and equivariance.
fn linear_constraints(p: &BracketProblem) -> Echelon {
    let (hd, md) = (p.h_dim(), p.m_dim());
    let nc = p.candidates.len();
    let h = &p.module.algebra;
    let mut e = Echelon::new(nc);
    let push = |rows: std::collections::BTreeMap<usize, SpVec>, e: &mut Echelon| {
        for r in rows.into_values() {
            let r = vector::collect(r);
            if !r.is_empty() {
                e.insert(&r);
            }
        }
    };
    for i in 0..md {
        for j in i..md {
            let mut rows: std::collections::BTreeMap<usize, SpVec> = std::collections::BTreeMap::new();
            for (s, c) in p.candidates.iter().enumerate() {
                for (l, x) in c.at(i, j).iter().chain(c.at(j, i)) {
                    rows.entry(*l).or_default().push((s, x.clone()));
                }
            }
            push(rows, &mut e);
            if e.rank() == nc {
                return e;
            }
        }
    }
    let gens = generating_set(h);
    for &g in &gens {
        let rho = &p.module.action[g];
        for i in 0..md {
            for j in 0..md {
                let mut rows: std::collections::BTreeMap<usize, SpVec> = std::collections::BTreeMap::new();
                for (s, c) in p.candidates.iter().enumerate() {
                    let v = c.at(i, j);
                    let mut acc = Accum::new(hd + md);
                    let vh: SpVec = v.iter().filter(|e| e.0 < hd).cloned().collect();
                    let vm: SpVec = v.iter().filter(|e| e.0 >= hd).map(|(l, x)| (l - hd, x.clone())).collect();
                    acc.add_scaled(&Rat::one(), &h.bracket(&vector::unit(g), &vh));
                    acc.add_scaled(&Rat::one(), &shift(&crate::linalg::op::apply(rho, &vm, md), hd));
                    for (k, x) in &rho[i] {
                        acc.add_scaled(&-x.clone(), c.at(*k, j));
                    }
                    for (k, x) in &rho[j] {
                        acc.add_scaled(&-x.clone(), c.at(i, *k));
                    }
                    for (l, x) in acc.take() {
                        rows.entry(l).or_default().push((s, x));
                    }
                }
                push(rows, &mut e);
                if e.rank() == nc {
                    return e;
                }
            }
        }
    }
    e
}

/// Monomial columns: t_k for k < r, then t_k t_q for k ≤ q.
fn quad_col(r: usize, k: usize, q: usize) -> usize {
    let (a, b) = if k <= q { (k, q) } else { (q, k) };
    r + a * r - a * (a + 1) / 2 + b
}

fn cols_to_poly(row: &SpVec, r: usize) -> MPoly {
    let mut p = MPoly::zero(r);
    let mut pairs = Vec::new();
    for a in 0..r {
        for b in a..r {
            pairs.push((a, b));
        }
    }
    for (c, x) in row {
        if *c < r {
            p = p.add(&MPoly::var(r, *c).scale(x));
        } else {
            let (a, b) = pairs[c - r];
            p = p.add(&MPoly::var(r, a).mul(&MPoly::var(r, b)).scale(x));
        }
    }
    p
}

fn jacobi_rows(p: &BracketProblem, maps: &[BilinearMap], t: [usize; 3], e: &mut Echelon) {
    let hd = p.h_dim();
    let r = maps.len();
    let mut rows: std::collections::BTreeMap<usize, SpVec> = std::collections::BTreeMap::new();
    for (i, j, l) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
        for (k, b) in maps.iter().enumerate() {
            let v = b.at(i, j);
            for (u, x) in v {
                if *u < hd {
                    for (w, y) in &p.module.action[*u][l] {
                        rows.entry(hd + w).or_default().push((k, x * y));
                    }
                } else {
                    for (q, b2) in maps.iter().enumerate() {
                        for (w, y) in b2.at(u - hd, l) {
                            rows.entry(*w).or_default().push((quad_col(r, k, q), x * y));
                        }
                    }
                }
            }
        }
    }
    for row in rows.into_values() {
        let row = vector::collect(row);
        if !row.is_empty() {
            e.insert(&row);
        }
    }
}

/// Maximal degree of the coefficient polynomials.
fn family_degree(f: &BracketFamily) -> u32 {
    f.coefficients.iter().map(MPoly::degree).max().unwrap_or(0)
}

/// check_lie on a grid with 2d+1 values per free parameter.
fn certify(p: &BracketProblem, f: &BracketFamily) -> bool {
    let k = f.free.len();
    if k > 2 {
        return false;
    }
    let m = 2 * family_degree(f) as i64 + 1;
    let mut point = vec![1i64; k];
    loop {
        let vals: Vec<Rat> = point.iter().map(|x| Rat::int(*x)).collect();
        if !check_lie(&p.assemble(&f.at(&vals))).ok {
            return false;
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return true;
            }
            point[pos] += 1;
            if point[pos] <= m {
                break;
            }
            point[pos] = 1;
            pos += 1;
        }
    }
}

/// All Lie brackets on h ⊕ m in the span of the candidates.
pub fn solve_equivariant_bracket(p: &BracketProblem) -> Result<EquivariantSolution, AlgError> {
    if p.candidates.is_empty() {
        return Err(AlgError::Invalid("empty candidate span".into()));
    }
    if p.candidates.iter().any(|c| c.m_dim != p.m_dim()) {
        return Err(AlgError::Invalid("candidate maps must be defined on m × m".into()));
    }
    let hd = p.h_dim();
    let nc = p.candidates.len();
    let mut lin = linear_constraints(p);
    let kernel = lin.null_space();
    let r = kernel.len();
    if r == 0 {
        return Ok(EquivariantSolution { linear_dim: 0, families: Vec::new(), unresolved: 0, irrational: 0, triples_used: 0 });
    }
    let maps: Vec<BilinearMap> = kernel.iter().map(|k| BilinearMap::combine(&p.candidates, k)).collect();
    // scaling m by λ multiplies h-valued coefficients by λ², m-valued by λ
    let m_valued: Vec<bool> = maps.iter().map(|b| b.table.iter().all(|v| v.iter().all(|e| e.0 >= hd))).collect();
    let normalize: Vec<usize> = (0..r).filter(|k| m_valued[*k]).collect();
    let coeffs_of = |vals: &[MPoly]| -> Vec<MPoly> {
        (0..nc)
            .map(|s| {
                let mut acc = MPoly::zero(r);
                for (k, kv) in kernel.iter().enumerate() {
                    let c = vector::get(kv, s);
                    if !c.is_zero() {
                        acc = acc.add(&vals[k].scale(&c));
                    }
                }
                acc
            })
            .collect()
    };
    let md = p.m_dim();
    let triples: Vec<[usize; 3]> = (0..md).flat_map(|i| (i + 1..md).flat_map(move |j| (j + 1..md).map(move |l| [i, j, l]))).collect();
    let total = triples.len();
    let step = stride(total);
    let ncols = r + r * (r + 1) / 2;
    let mut e = Echelon::new(ncols);
    let batch = 2000;
    let mut last_rank = usize::MAX;
    let mut used = 0;
    while used < total {
        let end = (used + batch).min(total);
        for q in used..end {
            jacobi_rows(p, &maps, triples[(q * step) % total], &mut e);
        }
        used = end;
        let stable = e.rank() == last_rank || e.rank() == ncols;
        last_rank = e.rank();
        if !stable && used < total {
            continue;
        }
        let eqs: Vec<MPoly> = e.rows().iter().map(|row| cols_to_poly(row, r)).collect();
        let report = solve_system(eqs, r, &SolveOptions { normalize: normalize.clone(), max_branches: 0 });
        let families: Vec<BracketFamily> = report
            .components
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| BracketFamily { coefficients: coeffs_of(&c.values), free: c.free.clone(), normalized: c.normalized.is_some(), certified: false })
            .collect();
        let complete = used == total;
        let mut certified: Vec<BracketFamily> = Vec::with_capacity(families.len());
        let mut all_ok = report.unresolved.is_empty();
        for mut f in families {
            f.certified = certify(p, &f);
            all_ok &= f.certified;
            certified.push(f);
        }
        if all_ok || complete {
            return Ok(EquivariantSolution {
                linear_dim: r,
                families: certified,
                unresolved: report.unresolved.len(),
                irrational: report.irrational,
                triples_used: used,
            });
        }
    }
    Ok(EquivariantSolution { linear_dim: r, families: Vec::new(), unresolved: 0, irrational: 0, triples_used: 0 })
}

/// A step coprime to `n`, near n·0.618, for a fixed scattered order.
pub(crate) fn stride(n: usize) -> usize {
    if n < 3 {
        return 1;
    }
    let mut s = (n as f64 * 0.618_033_988_7) as usize;
    while gcd(s, n) != 1 {
        s += 1;
    }
    s
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The bracket problem of T(C, J): h = D_{C₀,C₀} ⊕ d_{J₀,J₀} acting on
/// C₀⊗J₀, candidates T(xy)D_{a,b}, tr(ab)d_{x,y} and [a,b]⊗(x⋆y), with T
/// and tr the generic traces of J and C. Also returns T(C, J).
pub fn tits_bracket_problem(c: CompKind, j: &JordanKind) -> Result<(BracketProblem, TitsAlgebra), AlgError> {
    let comp = build_composition(c);
    let jord = build_jordan(j)?;
    let x = trace_admissible_view(&Ingredient::Comp(comp.clone()));
    let y = trace_admissible_view(&Ingredient::Jordan(jord.clone()));
    let (a, b) = (x.dim0(), y.dim0());
    let sx = DerSpan::new(x.generators(), a, "D")?;
    let sy = DerSpan::new(y.generators(), b, "d")?;
    let t = build_tits(x, y)?;
    let (dx, dy) = (t.dx, t.dy);
    let hd = dx + dy;
    let off_d = dx + a * b;
    let h_global: Vec<usize> = (0..dx).chain(off_d..off_d + dy).collect();
    let h_basis: Vec<SpVec> = h_global.iter().map(|&i| vector::unit(i)).collect();
    let h_labels = h_global.iter().map(|&i| t.algebra.labels()[i].clone()).collect();
    let h = t.algebra.restrict(&h_basis, h_labels).ok_or_else(|| AlgError::NotClosed("D ⊕ d is not a subalgebra".into()))?;
    let md = a * b;
    let action = h_global
        .iter()
        .map(|&g| (0..md).map(|i| t.algebra.get(g, dx + i).into_iter().map(|(k, v)| (k - dx, v)).collect()).collect())
        .collect();
    let module = ModuleAction::new(h, md, action);
    let big_t: Vec<Vec<Rat>> =
        (0..b).map(|p| (0..b).map(|q| jord.generic_trace(&jord.alg.mul(&vector::unit(p + 1), &vector::unit(q + 1)))).collect()).collect();
    let tr: Vec<Vec<Rat>> = (0..a).map(|p| (0..a).map(|q| comp.trace(&comp.alg.mul(&vector::unit(p + 1), &vector::unit(q + 1)))).collect()).collect();
    let comm: Vec<Vec<SpVec>> = (0..a)
        .map(|p| (0..a).map(|q| comp.alg.commutator(&vector::unit(p + 1), &vector::unit(q + 1)).into_iter().map(|(k, v)| (k - 1, v)).collect()).collect())
        .collect();
    let ystar = t.y.star.clone();
    let split = |i: usize| (i / b, i % b);
    let c1 = BilinearMap::from_fn("T(xy)D_{a,b}", md, |i, k| {
        let ((p, q), (r, s)) = (split(i), split(k));
        vector::scale(&sx.pair(a, p, r), &big_t[q][s])
    });
    let c2 = BilinearMap::from_fn("tr(ab)d_{x,y}", md, |i, k| {
        let ((p, q), (r, s)) = (split(i), split(k));
        vector::scale(&shift(&sy.pair(b, q, s), dx), &tr[p][r])
    });
    let c3 = BilinearMap::from_fn("[a,b]⊗(x⋆y)", md, |i, k| {
        let ((p, q), (r, s)) = (split(i), split(k));
        let mut out = Vec::new();
        for (u, x) in &comm[p][r] {
            for (v, z) in &ystar[q][s] {
                out.push((hd + u * b + v, x * z));
            }
        }
        vector::collect(out)
    });
    Ok((BracketProblem { module, candidates: vec![c1, c2, c3] }, t))
}

/// Images in T(C, J) of the basis of h ⊕ m: identity on h, λ on m.
pub fn tits_transport(t: &TitsAlgebra, lambda: &Rat) -> Vec<SpVec> {
    let md = t.m_dim();
    let off_d = t.dx + md;
    let mut cols: Vec<SpVec> = (0..t.dx).chain(off_d..off_d + t.dy).map(vector::unit).collect();
    cols.extend((0..md).map(|i| vec![(t.dx + i, lambda.clone())]));
    cols
}

/// sl₂ on k² with every bilinear map k² × k² → sl₂ ⊕ k² as a candidate.
pub fn natural_sl2_problem() -> BracketProblem {
    let module = crate::algebra::examples::natural_sl2();
    let mut candidates = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..5 {
                candidates.push(BilinearMap::from_fn(format!("e{i}e{j}->{l}"), 2, |p, q| if (p, q) == (i, j) { vector::unit(l) } else { Vec::new() }));
            }
        }
    }
    BracketProblem { module, candidates }
}

/// so(V₁) ⊕ so(V₂) on V₁⊗V₂ (split forms) with candidates
/// φ₂(x,y)φ_{a,b} and φ₁(a,b)φ_{x,y}.
pub fn orthogonal_pair_problem(n1: usize, n2: usize) -> Result<BracketProblem, AlgError> {
    let (f1, f2) = (BilinForm::split(n1, 1, 1), BilinForm::split(n2, 1, 1));
    let mut l1 = build_matrix_lie(&MatrixLieSpec::so(n1))?;
    let mut l2 = build_matrix_lie(&MatrixLieSpec::so(n2))?;
    let (d1, d2) = (l1.algebra.dim(), l2.algebra.dim());
    let h = l1.algebra.direct_sum(&l2.algebra);
    let md = n1 * n2;
    let mut action = Vec::with_capacity(d1 + d2);
    for o in l1.span.basis() {
        action.push((0..md).map(|i| o[i / n2].iter().map(|(k, x)| (k * n2 + i % n2, x.clone())).collect()).collect());
    }
    for o in l2.span.basis() {
        action.push((0..md).map(|i| o[i % n2].iter().map(|(k, x)| ((i / n2) * n2 + k, x.clone())).collect()).collect());
    }
    let module = ModuleAction::new(h, md, action);
    let mut p1 = vec![Vec::new(); n1 * n1];
    for a in 0..n1 {
        for b in 0..n1 {
            p1[a * n1 + b] = l1.span.coords(&phi_map(&f1, a, b)).ok_or_else(|| AlgError::Invalid("φ-map outside so(V₁)".into()))?;
        }
    }
    let mut p2 = vec![Vec::new(); n2 * n2];
    for x in 0..n2 {
        for y in 0..n2 {
            p2[x * n2 + y] = l2.span.coords(&phi_map(&f2, x, y)).ok_or_else(|| AlgError::Invalid("φ-map outside so(V₂)".into()))?;
        }
    }
    let c1 = BilinearMap::from_fn("φ₂(x,y)φ_{a,b}", md, |i, k| vector::scale(&p1[(i / n2) * n1 + k / n2], f2.at(i % n2, k % n2)));
    let c2 = BilinearMap::from_fn("φ₁(a,b)φ_{x,y}", md, |i, k| vector::scale(&shift(&p2[(i % n2) * n2 + k % n2], d1), f1.at(i / n2, k / n2)));
    Ok(BracketProblem { module, candidates: vec![c1, c2] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ly_from_reductive, ReductivePair};
    use crate::matrix::{check_coincidence, lts_orthosymplectic_sum};

    #[test]
    fn quad_columns_are_dense() {
        let r = 3;
        let cols: Vec<usize> = (0..r).flat_map(|a| (a..r).map(move |b| quad_col(r, a, b))).collect();
        assert_eq!(cols, (r..r + 6).collect::<Vec<_>>());
    }

    #[test]
    fn generating_set_skips_brackets() {
        // e alone spans a line, so h is kept before f is reached
        assert_eq!(generating_set(&crate::algebra::examples::sl2()), vec![0, 1, 2]);
        // [x, y] = y: x and y are both needed
        assert_eq!(generating_set(&crate::algebra::examples::solvable2()), vec![0, 1]);
    }

    #[test]
    fn natural_sl2_has_no_bracket() {
        let s = solve_equivariant_bracket(&natural_sl2_problem()).unwrap();
        assert_eq!(s.linear_dim, 0);
        assert!(s.families.is_empty());
    }

    #[test]
    fn empty_candidates_rejected() {
        let p = BracketProblem { module: crate::algebra::examples::natural_sl2(), candidates: Vec::new() };
        assert!(solve_equivariant_bracket(&p).is_err());
    }

    #[test]
    fn orthogonal_pair_recovers_the_sum() {
        let p = orthogonal_pair_problem(3, 5).unwrap();
        let s = solve_equivariant_bracket(&p).unwrap();
        assert_eq!(s.families.len(), 1, "{s:?}");
        let f = &s.families[0];
        assert!(f.certified);
        assert_eq!(f.dim(), 1);
        let c = f.at(&[Rat::one()]);
        assert_eq!(c[0], c[1]);
        let g = p.assemble(&vec![Rat::one(); 2]);
        let (hd, md) = (p.h_dim(), p.m_dim());
        let pair = ReductivePair::new(g, (0..hd).map(vector::unit).collect(), (hd..hd + md).map(vector::unit).collect()).unwrap();
        let ly = ly_from_reductive(&pair).unwrap();
        let sum = lts_orthosymplectic_sum(&BilinForm::split(3, 1, 1), &BilinForm::split(5, 1, 1)).unwrap().ly;
        assert!(check_coincidence(&ly, &sum, &crate::linalg::Mat::identity(md)).unwrap());
    }

    #[test]
    fn octonions_with_h3k_give_one_family() {
        let (p, t) = tits_bracket_problem(CompKind::O, &JordanKind::Hermitian(3, CompKind::K1)).unwrap();
        let s = solve_equivariant_bracket(&p).unwrap();
        assert_eq!(s.linear_dim, 3);
        assert_eq!(s.dimension(), Some(1), "{s:?}");
        let f = s.families.iter().find(|f| f.dim() == 1).unwrap();
        assert!(f.certified);
        let c = f.at(&[Rat::one()]);
        assert_eq!(c, vec![Rat::new(4, 3), Rat::int(2), Rat::one()]);
        let g = p.assemble(&c);
        assert_eq!(g.homomorphism_violation(&t.algebra, &tits_transport(&t, &Rat::int(2))), None);
    }
}
