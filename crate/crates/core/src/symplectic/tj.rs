//! The symplectic triple systems T_J on 2×2 arrays (α, a; b, β), α and β
//! scalars and a, b in a cubic Jordan algebra J.
//!
//! The skew form is fixed as
//! (x₁, x₂) = α₁β₂ − β₁α₂ + T(a₁, b₂) − T(b₁, a₂)
//! and the triple product is solved for inside the span of the candidate
//! maps below, built from α, β, the trace pairing T(x, y), the cross
//! product x × y = 2x∘y − T(x)y − T(y)x + (T(x)T(y) − T(x∘y))1 and the
//! trilinear norm N(x, y, z) = T(x × y, z). The conditions imposed are the
//! Jacobi identity of g(T): symmetry of {xy·}, Jacobi on three odd
//! elements, invariance of the form and the derivation property of d_{x,y}.
//! The last one is quadratic and goes through the polynomial solver.

use std::collections::{BTreeMap, HashMap};

use super::{GOfT, SymplecticTripleData};
use crate::algebra::{commutant_dim, AlgError};
use crate::compjordan::jordan::hermitian;
use crate::compjordan::{build_composition, JordanKind, UnitalAlg};
use crate::linalg::polysys::{solve_system, MPoly, SolveOptions};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::{inverse, BilinForm, Echelon, Mat};
use crate::rat::Rat;
use crate::tits::equivariant::stride;

pub const TJ_CATALOG: [&str; 5] = ["k", "H3(k)", "H3(K)", "H3(Q)", "H3(O)"];

/// A Jordan algebra of a cubic form with basepoint. H₃(C) uses the basis
/// E₁₁, E₂₂, E₃₃ followed by off-diagonal weight vectors, so that the
/// multiplications by the E_ii are diagonal.
#[derive(Clone, Debug)]
pub struct CubicJordan {
    pub name: String,
    pub alg: UnitalAlg,
    one: SpVec,
    trace: Vec<Rat>,
    tpair: Vec<Vec<Rat>>,
    cross: Vec<SpVec>,
}

pub fn cubic_jordan(name: &str) -> Result<CubicJordan, AlgError> {
    let name = name.trim();
    if name == "k" {
        let alg = UnitalAlg::from_fn(vec!["1".into()], |_, _| vector::unit(0));
        return Ok(CubicJordan::new(name.into(), alg, vector::unit(0), vec![Rat::int(3)]));
    }
    let c = match name.parse::<JordanKind>()? {
        JordanKind::Hermitian(3, c) => c,
        _ => return Err(AlgError::Invalid(format!("{name} is not one of {}", TJ_CATALOG.join(", ")))),
    };
    let h = hermitian(3, &build_composition(c));
    // 1, E1−E2, E2−E3 ↦ E11, E22, E33
    let third = |a: i64, b: i64, c: i64| vector::collect(vec![(0, Rat::new(a, 3)), (1, Rat::new(b, 3)), (2, Rat::new(c, 3))]);
    let n = h.dim();
    let mut basis = vec![third(1, 2, 1), third(1, -1, 1), third(1, -1, -2)];
    basis.extend((3..n).map(vector::unit));
    let inv = inverse(&Mat::from_sparse_cols(n, &basis)).expect("basis change");
    let mut labels: Vec<String> = vec!["E11".into(), "E22".into(), "E33".into()];
    labels.extend(h.alg.labels()[3..].iter().cloned());
    let alg = UnitalAlg::from_fn(labels, |i, j| inv.mul_sparse(&h.alg.mul(&basis[i], &basis[j])));
    let one = vec![(0, Rat::one()), (1, Rat::one()), (2, Rat::one())];
    let trace = (0..n).map(|i| Rat::from(i64::from(i < 3))).collect();
    Ok(CubicJordan::new(name.into(), alg, one, trace))
}

impl CubicJordan {
    fn new(name: String, alg: UnitalAlg, one: SpVec, trace: Vec<Rat>) -> CubicJordan {
        let n = alg.dim();
        let tr = |v: &SpVec| v.iter().map(|(i, x)| x * &trace[*i]).sum::<Rat>();
        let tpair: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| tr(alg.basis_product(i, j))).collect()).collect();
        let mut cross = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (ti, tj) = (&trace[i], &trace[j]);
                let mut acc = Accum::new(n);
                acc.add_scaled(&Rat::int(2), alg.basis_product(i, j));
                acc.add(j, &-ti.clone());
                acc.add(i, &-tj.clone());
                acc.add_scaled(&(ti * tj - &tpair[i][j]), &one);
                cross.push(acc.take());
            }
        }
        CubicJordan { name, alg, one, trace, tpair, cross }
    }

    pub fn one(&self) -> &SpVec {
        &self.one
    }

    /// The generic trace T(x).
    pub fn trace(&self, x: &SpVec) -> Rat {
        x.iter().map(|(i, c)| c * &self.trace[*i]).sum()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// T(e_i, e_j) = T(e_i ∘ e_j).
    pub fn trace_pair(&self, i: usize, j: usize) -> &Rat {
        &self.tpair[i][j]
    }

    /// e_i × e_j.
    pub fn cross(&self, i: usize, j: usize) -> &SpVec {
        &self.cross[i * self.dim() + j]
    }

    /// N(e_i, e_j, e_k) = T(e_i × e_j, e_k).
    pub fn norm3(&self, i: usize, j: usize, k: usize) -> Rat {
        self.cross(i, j).iter().map(|(m, c)| c * &self.tpair[*m][k]).sum()
    }

    pub fn cross_of(&self, x: &SpVec, y: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim());
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(&(a * b), self.cross(*i, *j));
            }
        }
        acc.take()
    }

    /// The cubic norm N(x) = T(x#, x)/3 with x# = ½ x × x.
    pub fn norm(&self, x: &SpVec) -> Rat {
        let s = self.cross_of(x, x);
        let mut t = Rat::zero();
        for (m, a) in &s {
            for (k, b) in x {
                t += &(&(a * b) * &self.tpair[*m][*k]);
            }
        }
        t / Rat::int(6)
    }

    /// T_J has dimension 2 + 2·dim J.
    pub fn t_dim(&self) -> usize {
        2 * self.dim() + 2
    }

    fn t_labels(&self) -> Vec<String> {
        let mut l = vec!["al".to_string()];
        l.extend(self.alg.labels().iter().map(|s| format!("a[{s}]")));
        l.extend(self.alg.labels().iter().map(|s| format!("b[{s}]")));
        l.push("be".into());
        l
    }

    /// The fixed skew form on T_J.
    pub fn t_form(&self) -> BilinForm {
        let n = self.dim();
        let d = self.t_dim();
        let mut g = Mat::zeros(d, d);
        g.set(0, d - 1, Rat::one());
        g.set(d - 1, 0, Rat::int(-1));
        for i in 0..n {
            for k in 0..n {
                let t = &self.tpair[i][k];
                if !t.is_zero() {
                    g.set(1 + i, 1 + n + k, t.clone());
                    g.set(1 + n + k, 1 + i, -t.clone());
                }
            }
        }
        BilinForm::new(g, -1).expect("skew by construction")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Al,
    A(usize),
    B(usize),
    Be,
}

impl Slot {
    fn of(n: usize, i: usize) -> Slot {
        match i {
            0 => Slot::Al,
            i if i <= n => Slot::A(i - 1),
            i if i <= 2 * n => Slot::B(i - 1 - n),
            _ => Slot::Be,
        }
    }

    fn index(self, n: usize) -> usize {
        match self {
            Slot::Al => 0,
            Slot::A(i) => 1 + i,
            Slot::B(i) => 1 + n + i,
            Slot::Be => 2 * n + 1,
        }
    }

    fn mirror(self) -> Slot {
        match self {
            Slot::Al => Slot::Be,
            Slot::A(i) => Slot::B(i),
            Slot::B(i) => Slot::A(i),
            Slot::Be => Slot::Al,
        }
    }
}

/// Candidate shapes with α- or a-valued output; the mirror swaps α ↔ β and
/// a ↔ b in inputs and output.
#[derive(Clone, Copy, Debug)]
enum Shape {
    /// α_i α_j β_k, k the given slot.
    AlAlBe(usize),
    /// α_{p0} T(a_{p1}, b_{p2}).
    AlT([usize; 3]),
    /// N(a₀, a₁, a₂).
    Norm,
    /// α_{p0} β_{p1} a_{p2}.
    AlBeA([usize; 3]),
    /// α_i (b_j × b_k).
    AlCross(usize),
    /// T(a_{p0}, b_{p1}) a_{p2}.
    TA([usize; 3]),
    /// (a_i × a_j) × b_k, k the given slot.
    CrossCross(usize),
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    shape: Shape,
    mirrored: bool,
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn candidates() -> Vec<Candidate> {
    let mut shapes = Vec::new();
    shapes.extend((0..3).map(Shape::AlAlBe));
    shapes.extend(PERMS.iter().map(|p| Shape::AlT(*p)));
    shapes.push(Shape::Norm);
    shapes.extend(PERMS.iter().map(|p| Shape::AlBeA(*p)));
    shapes.extend((0..3).map(Shape::AlCross));
    shapes.extend(PERMS.iter().map(|p| Shape::TA(*p)));
    shapes.extend((0..3).map(Shape::CrossCross));
    let mut out: Vec<Candidate> = shapes.iter().map(|s| Candidate { shape: *s, mirrored: false }).collect();
    out.extend(shapes.iter().map(|s| Candidate { shape: *s, mirrored: true }));
    out
}

impl Candidate {
    fn name(&self) -> String {
        let (al, be, a, b) = if self.mirrored { ("be", "al", "b", "a") } else { ("al", "be", "a", "b") };
        match self.shape {
            Shape::AlAlBe(k) => {
                let (i, j) = others(k);
                format!("{al}{i} {al}{j} {be}{k} -> {al}")
            }
            Shape::AlT(p) => format!("{al}{} T({a}{},{b}{}) -> {al}", p[0], p[1], p[2]),
            Shape::Norm => format!("N({a}0,{a}1,{a}2) -> {al}"),
            Shape::AlBeA(p) => format!("{al}{} {be}{} {a}{} -> {a}", p[0], p[1], p[2]),
            Shape::AlCross(i) => {
                let (j, k) = others(i);
                format!("{al}{i} ({b}{j} x {b}{k}) -> {a}")
            }
            Shape::TA(p) => format!("T({a}{},{b}{}) {a}{} -> {a}", p[0], p[1], p[2]),
            Shape::CrossCross(k) => {
                let (i, j) = others(k);
                format!("({a}{i} x {a}{j}) x {b}{k} -> {a}")
            }
        }
    }

    /// Value on three basis elements of T_J, added into `acc` scaled by `c`.
    fn eval(&self, j: &CubicJordan, s: [Slot; 3], c: &Rat, acc: &mut Accum) {
        let n = j.dim();
        let s = if self.mirrored { s.map(Slot::mirror) } else { s };
        let mirrored = self.mirrored;
        let mut put = |o: Slot, x: &Rat| {
            let o = if mirrored { o.mirror() } else { o };
            acc.add(o.index(n), &(c * x));
        };
        let al = |i: usize| s[i] == Slot::Al;
        let be = |i: usize| s[i] == Slot::Be;
        let a = |i: usize| match s[i] {
            Slot::A(x) => Some(x),
            _ => None,
        };
        let b = |i: usize| match s[i] {
            Slot::B(x) => Some(x),
            _ => None,
        };
        let one = Rat::one();
        match self.shape {
            Shape::AlAlBe(k) => {
                let (i, l) = others(k);
                if al(i) && al(l) && be(k) {
                    put(Slot::Al, &one);
                }
            }
            Shape::AlT(p) => {
                if let (true, Some(x), Some(y)) = (al(p[0]), a(p[1]), b(p[2])) {
                    put(Slot::Al, j.trace_pair(x, y));
                }
            }
            Shape::Norm => {
                if let (Some(x), Some(y), Some(z)) = (a(0), a(1), a(2)) {
                    put(Slot::Al, &j.norm3(x, y, z));
                }
            }
            Shape::AlBeA(p) => {
                if let (true, true, Some(x)) = (al(p[0]), be(p[1]), a(p[2])) {
                    put(Slot::A(x), &one);
                }
            }
            Shape::AlCross(i) => {
                let (k, l) = others(i);
                if let (true, Some(x), Some(y)) = (al(i), b(k), b(l)) {
                    for (m, v) in j.cross(x, y) {
                        put(Slot::A(*m), v);
                    }
                }
            }
            Shape::TA(p) => {
                if let (Some(x), Some(y), Some(z)) = (a(p[0]), b(p[1]), a(p[2])) {
                    put(Slot::A(z), j.trace_pair(x, y));
                }
            }
            Shape::CrossCross(k) => {
                let (i, l) = others(k);
                if let (Some(x), Some(y), Some(z)) = (a(i), a(l), b(k)) {
                    for (m, v) in j.cross(x, y) {
                        for (q, w) in j.cross(*m, z) {
                            put(Slot::A(*q), &(v * w));
                        }
                    }
                }
            }
        }
    }
}

/// A solved T_J: the triple data, its certified g(T), and the nonzero
/// candidate coefficients by name.
pub struct TjSolution {
    pub jordan: String,
    pub data: SymplecticTripleData,
    pub g: GOfT,
    pub coefficients: Vec<(String, Rat)>,
    /// Linearly independent candidates among the 56.
    pub independent: usize,
    /// Dimension of the affine solution space of the linear conditions.
    pub affine_dim: usize,
}

struct Problem<'a> {
    j: &'a CubicJordan,
    cands: Vec<Candidate>,
    form: BilinForm,
    d: usize,
}

impl Problem<'_> {
    fn slots(&self, t: [usize; 3]) -> [Slot; 3] {
        let n = self.j.dim();
        t.map(|i| Slot::of(n, i))
    }

    /// Each candidate's value on a basis triple.
    fn evals(&self, t: [usize; 3], acc: &mut Accum) -> Vec<SpVec> {
        let s = self.slots(t);
        let one = Rat::one();
        self.cands
            .iter()
            .map(|c| {
                c.eval(self.j, s, &one, acc);
                acc.take()
            })
            .collect()
    }

    fn triple_tuple(&self, q: usize) -> [usize; 3] {
        let d = self.d;
        [q / (d * d), (q / d) % d, q % d]
    }

    /// Symmetry, odd Jacobi and form-invariance rows from one basis triple.
    /// Columns are the candidates, then the constant.
    fn linear_rows(&self, t: [usize; 3], w: usize, e: &mut Echelon, acc: &mut Accum) {
        let nc = self.cands.len();
        let d = self.d;
        let [x, y, z] = t;
        let mut rows: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        let exyz = self.evals(t, acc);
        if x != y {
            let eyxz = self.evals([y, x, z], acc);
            for s in 0..nc {
                for (l, v) in &exyz[s] {
                    rows.entry(*l).or_default().push((s, v.clone()));
                }
                for (l, v) in &eyxz[s] {
                    rows.entry(*l).or_default().push((s, -v.clone()));
                }
            }
            flush(&mut rows, e);
        }
        let rot = [exyz, self.evals([y, z, x], acc), self.evals([z, x, y], acc)];
        let xs = [(x, y, z), (y, z, x), (z, x, y)];
        for u in 0..2 {
            for v in 0..2 {
                for w2 in 0..2 {
                    let vs = [(u, v, w2), (v, w2, u), (w2, u, v)];
                    for r in 0..3 {
                        let (a, b, c) = vs[r];
                        let (xa, xb, xc) = xs[r];
                        let f = self.form.at(xa, xb);
                        if !f.is_zero() {
                            for (vi, p) in super::phi_uv(a, b)[c].iter() {
                                rows.entry(vi * d + xc).or_default().push((nc, f * p));
                            }
                        }
                        let ph = super::phi(a, b);
                        if !ph.is_zero() {
                            for (s, ev) in rot[r].iter().enumerate() {
                                for (l, val) in ev {
                                    rows.entry(c * d + l).or_default().push((s, &ph * val));
                                }
                            }
                        }
                    }
                    flush(&mut rows, e);
                }
            }
        }
        // (d_{x,y} z, w) + (z, d_{x,y} w) = 0
        let exyw = self.evals([x, y, w], acc);
        let mut row = Vec::new();
        for s in 0..nc {
            for (l, v) in &rot[0][s] {
                let f = self.form.at(*l, w);
                if !f.is_zero() {
                    row.push((s, v * f));
                }
            }
            for (l, v) in &exyw[s] {
                let f = self.form.at(z, *l);
                if !f.is_zero() {
                    row.push((s, v * f));
                }
            }
        }
        let row = vector::collect(row);
        if !row.is_empty() {
            e.insert(&row);
        }
    }
}

fn flush(rows: &mut BTreeMap<usize, Vec<(usize, Rat)>>, e: &mut Echelon) {
    for r in std::mem::take(rows).into_values() {
        let r = vector::collect(r);
        if !r.is_empty() {
            e.insert(&r);
        }
    }
}

/// Feeds sample indices in a scattered order until a batch leaves the rank
/// unchanged or the samples run out.
fn sample(total: usize, used: &mut usize, batch: usize, e: &mut Echelon, mut feed: impl FnMut(usize, &mut Echelon)) {
    let step = stride(total);
    let mut last = e.rank();
    while *used < total {
        let end = (*used + batch).min(total);
        for q in *used..end {
            feed((q * step) % total, e);
        }
        *used = end;
        if e.rank() == last {
            return;
        }
        last = e.rank();
    }
}

/// Independent candidates, read off the pivots of their evaluations.
fn independent(p: &Problem) -> Vec<usize> {
    let nc = p.cands.len();
    let mut e = Echelon::new(nc);
    let mut acc = Accum::new(p.d);
    let total = p.d * p.d * p.d;
    let step = stride(total);
    let mut rows: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
    for q in 0..total {
        let ev = p.evals(p.triple_tuple((q * step) % total), &mut acc);
        for (s, v) in ev.iter().enumerate() {
            for (l, x) in v {
                rows.entry(*l).or_default().push((s, x.clone()));
            }
        }
        flush(&mut rows, &mut e);
        if e.rank() == nc {
            break;
        }
    }
    e.pivots()
}

/// Solutions of the linear rows with constant column 1: c₀ + span(K).
fn affine(e: &mut Echelon, nc: usize) -> Option<(SpVec, Vec<SpVec>)> {
    let ns = e.null_space();
    let pos = ns.iter().position(|v| !vector::get(v, nc).is_zero())?;
    let p = &ns[pos];
    let c0 = vector::scale(p, &vector::get(p, nc).recip());
    let kernel = ns
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pos)
        .map(|(_, v)| {
            let k = vector::get(v, nc);
            vector::axpy(v, &-k, &c0)
        })
        .collect();
    let c0 = c0.into_iter().filter(|e| e.0 < nc).collect();
    Some((c0, kernel))
}

/// Columns 0 (constant), 1 + k (t_k), then t_k t_q for k ≤ q.
fn qcol(r: usize, i: usize, j: usize) -> usize {
    match (i, j) {
        (0, j) => j,
        (i, 0) => i,
        _ => {
            let (a, b) = if i <= j { (i - 1, j - 1) } else { (j - 1, i - 1) };
            1 + r + a * r - a * (a + 1) / 2 + b
        }
    }
}

fn row_to_poly(row: &SpVec, r: usize) -> MPoly {
    let mut cols = vec![(0, 0)];
    cols.extend((1..=r).map(|k| (0, k)));
    for a in 1..=r {
        for b in a..=r {
            cols.push((a, b));
        }
    }
    let lin = |k: usize| if k == 0 { MPoly::constant(r, Rat::one()) } else { MPoly::var(r, k - 1) };
    let mut p = MPoly::zero(r);
    for (c, x) in row {
        let (a, b) = cols[*c];
        p = p.add(&lin(a).mul(&lin(b)).scale(x));
    }
    p
}

type LinTriple = Vec<(usize, SpVec)>;

/// The quadratic stage: {xyz} as linear forms in the affine parameters.
struct Quadratic<'a> {
    p: &'a Problem<'a>,
    coef: Vec<SpVec>,
    r: usize,
    cache: HashMap<[usize; 3], LinTriple>,
    acc: Accum,
}

impl Quadratic<'_> {
    fn triple(&mut self, t: [usize; 3]) -> LinTriple {
        if let Some(v) = self.cache.get(&t) {
            return v.clone();
        }
        let ev = self.p.evals(t, &mut self.acc);
        let mut by_l: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        for (s, v) in ev.iter().enumerate() {
            for (l, x) in v {
                for (k, c) in &self.coef[s] {
                    by_l.entry(*l).or_default().push((*k, x * c));
                }
            }
        }
        let out: LinTriple = by_l.into_iter().map(|(l, v)| (l, vector::collect(v))).filter(|e| !e.1.is_empty()).collect();
        self.cache.insert(t, out.clone());
        out
    }

    /// [d_ab, d_xy] z − d_{d_ab x, y} z − d_{x, d_ab y} z.
    fn rows(&mut self, a: usize, b: usize, x: usize, y: usize, z: usize, e: &mut Echelon) {
        let r = self.r;
        let mut out: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        let mut add = |sign: i64, outer: &LinTriple, inner: &dyn Fn(usize) -> [usize; 3], q: &mut Self| {
            for (m, lm) in outer {
                for (l, ll) in q.triple(inner(*m)) {
                    for (i, u) in lm {
                        for (j, v) in &ll {
                            out.entry(l).or_default().push((qcol(r, *i, *j), Rat::int(sign) * (u * v)));
                        }
                    }
                }
            }
        };
        let xyz = self.triple([x, y, z]);
        add(1, &xyz, &|m| [a, b, m], self);
        let abz = self.triple([a, b, z]);
        add(-1, &abz, &|m| [x, y, m], self);
        let abx = self.triple([a, b, x]);
        add(-1, &abx, &|m| [m, y, z], self);
        let aby = self.triple([a, b, y]);
        add(-1, &aby, &|m| [x, m, z], self);
        flush(&mut out, e);
    }
}

fn coefficients_at(c0: &SpVec, kernel: &[SpVec], t: &[Rat]) -> SpVec {
    let mut c = c0.clone();
    for (k, v) in kernel.iter().enumerate() {
        c = vector::axpy(&c, &t[k], v);
    }
    c
}

fn assemble(p: &Problem, c: &SpVec) -> Result<SymplecticTripleData, AlgError> {
    let mut acc = Accum::new(p.d);
    let slots = |t: [usize; 3]| p.slots(t);
    SymplecticTripleData::new(p.j.t_labels(), p.form.clone(), |x, y, z| {
        let s = slots([x, y, z]);
        for (k, ck) in c {
            p.cands[*k].eval(p.j, s, ck, &mut acc);
        }
        acc.take()
    })
}

/// Accepts a candidate if g(T) is Lie, Inder(T) acts irreducibly on T and
/// Inder(T) is not all of sp(T). The last condition rules out the classical
/// triple {xyz} = (x,z)y + (y,z)x, which lies in the candidate span and
/// gives g(T) = sp(V ⊕ T).
fn certify(p: &Problem, c: &SpVec) -> Option<(SymplecticTripleData, GOfT)> {
    let data = assemble(p, c).ok()?;
    let g = data.validate().ok()?;
    let d = p.d;
    (g.inder_dim() < d * (d + 1) / 2 && commutant_dim(&g.inder) == 1).then_some((data, g))
}

/// Solves for T_J. Fails only if no sampled solution certifies.
pub fn construct_tj(j: &CubicJordan) -> Result<TjSolution, AlgError> {
    let all = candidates();
    let base = Problem { j, cands: all.clone(), form: j.t_form(), d: j.t_dim() };
    let piv = independent(&base);
    let p = Problem { j, cands: piv.iter().map(|i| all[*i]).collect(), form: base.form.clone(), d: base.d };
    let nc = p.cands.len();
    let d = p.d;
    let lin_total = d * d * d;
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect();
    let quad_total = pairs.len() * pairs.len() * d;
    let mut lin = Echelon::new(nc + 1);
    let mut acc = Accum::new(d);
    let wstep = stride(d);
    for q in 0..lin_total {
        p.linear_rows(p.triple_tuple(q), (q * wstep) % d, &mut lin, &mut acc);
        if lin.rank() == nc + 1 {
            break;
        }
    }
    let (c0, kernel) = affine(&mut lin, nc).ok_or_else(|| AlgError::Invalid(format!("no triple product on T_{} satisfies the linear conditions", j.name)))?;
    let r = kernel.len();
    let coef: Vec<SpVec> = (0..nc)
        .map(|s| {
            let mut v = Vec::new();
            let c = vector::get(&c0, s);
            if !c.is_zero() {
                v.push((0, c));
            }
            for (k, kv) in kernel.iter().enumerate() {
                let c = vector::get(kv, s);
                if !c.is_zero() {
                    v.push((k + 1, c));
                }
            }
            v
        })
        .collect();
    let mut quad = Quadratic { p: &p, coef, r, cache: HashMap::new(), acc: Accum::new(d) };
    let mut qe = Echelon::new(1 + r + r * (r + 1) / 2);
    let mut used = 0;
    let mut batch = 256;
    loop {
        sample(quad_total, &mut used, batch, &mut qe, |q, e| {
            let z = q % d;
            let rest = q / d;
            let (x, y) = pairs[rest % pairs.len()];
            let (a, b) = pairs[rest / pairs.len()];
            quad.rows(a, b, x, y, z, e);
        });
        let eqs: Vec<MPoly> = qe.rows().iter().map(|row| row_to_poly(row, r)).collect();
        let report = solve_system(eqs, r, &SolveOptions { normalize: (0..r).collect(), max_branches: 0 });
        for comp in &report.components {
            let c = coefficients_at(&c0, &kernel, &comp.unit_point());
            if let Some((data, g)) = certify(&p, &c) {
                let coefficients = c.iter().map(|(s, x)| (p.cands[*s].name(), x.clone())).collect();
                return Ok(TjSolution { jordan: j.name.clone(), data, g, coefficients, independent: nc, affine_dim: r });
            }
        }
        if used == quad_total {
            return Err(AlgError::Invalid(format!("no certified triple product on T_{}", j.name)));
        }
        batch *= 4;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifty_six_candidates() {
        let c = candidates();
        assert_eq!(c.len(), 56);
        assert_eq!(c[0].name(), "al1 al2 be0 -> al");
        assert_eq!(c[55].name(), "(b0 x b1) x a2 -> b");
    }

    #[test]
    fn cross_and_norm_on_h3k() {
        let j = cubic_jordan("H3(k)").unwrap();
        assert_eq!(j.dim(), 6);
        let one = j.one().clone();
        assert_eq!(j.trace(&one), Rat::int(3));
        assert_eq!(j.norm(&one), Rat::one());
        assert_eq!(j.cross_of(&one, &one), vector::scale(&one, &Rat::int(2)));
        // (x#)# = N(x) x
        let x: SpVec = vec![(0, Rat::int(2)), (1, Rat::int(1)), (3, Rat::int(-1)), (5, Rat::new(1, 2))];
        let sharp = |v: &SpVec| vector::scale(&j.cross_of(v, v), &Rat::new(1, 2));
        assert_eq!(sharp(&sharp(&x)), vector::scale(&x, &j.norm(&x)));
    }

    #[test]
    fn ground_field_norm_is_cube() {
        let j = cubic_jordan("k").unwrap();
        assert_eq!(j.norm(&vec![(0, Rat::int(2))]), Rat::int(8));
        assert!(cubic_jordan("H2(k)").is_err());
    }

    #[test]
    fn qcol_layout() {
        assert_eq!(qcol(2, 0, 0), 0);
        assert_eq!(qcol(2, 2, 0), 2);
        assert_eq!(qcol(2, 1, 1), 3);
        assert_eq!(qcol(2, 2, 1), 4);
        assert_eq!(qcol(2, 2, 2), 5);
    }

    #[test]
    fn tk_solves_to_g2() {
        let s = construct_tj(&cubic_jordan("k").unwrap()).unwrap();
        assert_eq!(s.data.dim(), 4);
        assert_eq!(s.g.dim(), 14);
    }
}
