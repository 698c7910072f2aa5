//! Matrix Lie algebras, trace-zero symmetric maps, and the classical LY
//! families built on tensor products of natural modules.

use crate::algebra::{AlgError, AntiAlg, LYAlg};
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::{inverse, BasisCoords, BilinForm, Mat};
use crate::rat::Rat;

/// A linearly independent list of n×n operators with coordinates.
pub struct MatSpan {
    size: usize,
    basis: Vec<Op>,
    coords: BasisCoords,
}

impl MatSpan {
    pub fn new(basis: Vec<Op>, size: usize) -> Option<MatSpan> {
        let flat: Vec<SpVec> = basis.iter().map(|o| op::flatten(o, size)).collect();
        let coords = BasisCoords::new(&flat, size * size)?;
        Some(MatSpan { size, basis, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Op] {
        &self.basis
    }

    pub fn coords(&mut self, o: &[SpVec]) -> Option<SpVec> {
        self.coords.coords(&op::flatten(o, self.size))
    }

    pub fn element(&self, v: &SpVec) -> Op {
        op::combine(&self.basis, v, self.size)
    }

    /// Commutator structure constants; fails if the span is not closed.
    pub fn lie_algebra(&mut self, labels: Vec<String>) -> Result<AntiAlg, AlgError> {
        let r = self.dim();
        let mut a = AntiAlg::zero(r, labels);
        for s in 0..r {
            for t in s + 1..r {
                let c = op::commutator(&self.basis[s], &self.basis[t], self.size);
                let v = self.coords(&c).ok_or_else(|| AlgError::NotClosed(format!("[{s}, {t}] leaves the matrix span")))?;
                a.set(s, t, v);
            }
        }
        Ok(a)
    }
}

fn unit_op(n: usize, row: usize, col: usize, x: Rat) -> Op {
    let mut o: Op = vec![Vec::new(); n];
    o[col].push((row, x));
    o
}

fn add_ops(a: &[SpVec], b: &[SpVec]) -> Op {
    a.iter().zip(b).map(|(x, y)| vector::add(x, y)).collect()
}

fn scale_op(a: &[SpVec], c: &Rat) -> Op {
    a.iter().map(|x| vector::scale(x, c)).collect()
}

/// φ(e_v,·)e_w + sign·φ(e_w,·)e_v; sign −ε gives φ_{v,w} in skew(V,φ),
/// sign +ε the symmetric map.
fn form_map(f: &BilinForm, v: usize, w: usize, sign: i64) -> Op {
    let n = f.dim();
    let s = Rat::int(sign);
    (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            let a = f.at(v, k);
            if !a.is_zero() {
                terms.push((w, a.clone()));
            }
            let b = f.at(w, k);
            if !b.is_zero() {
                terms.push((v, &s * b));
            }
            vector::collect(terms)
        })
        .collect()
}

/// φ_{e_v,e_w} = φ(e_v,·)e_w − εφ(e_w,·)e_v.
pub fn phi_map(f: &BilinForm, v: usize, w: usize) -> Op {
    form_map(f, v, w, -(f.sign as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Gl,
    Sl,
    So,
    Sp,
}

#[derive(Clone, Debug)]
pub struct MatrixLieSpec {
    pub kind: MatrixKind,
    pub dim: usize,
    pub form: Option<BilinForm>,
}

impl MatrixLieSpec {
    pub fn gl(n: usize) -> MatrixLieSpec {
        MatrixLieSpec { kind: MatrixKind::Gl, dim: n, form: None }
    }

    pub fn sl(n: usize) -> MatrixLieSpec {
        MatrixLieSpec { kind: MatrixKind::Sl, dim: n, form: None }
    }

    /// so on the split symmetric form.
    pub fn so(n: usize) -> MatrixLieSpec {
        MatrixLieSpec { kind: MatrixKind::So, dim: n, form: Some(BilinForm::split(n, 1, 1)) }
    }

    /// sp on the split skew form; `n` must be even.
    pub fn sp(n: usize) -> MatrixLieSpec {
        MatrixLieSpec { kind: MatrixKind::Sp, dim: n, form: (n % 2 == 0).then(|| BilinForm::split(n, -1, 0)) }
    }
}

/// A matrix Lie algebra with its basis matrices and a split Cartan
/// subalgebra (the basis combinations that are diagonal matrices).
pub struct MatrixLie {
    pub algebra: AntiAlg,
    pub span: MatSpan,
    pub cartan: Vec<SpVec>,
}

fn sl_basis(n: usize) -> (Vec<Op>, Vec<String>) {
    let mut ops = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                ops.push(unit_op(n, i, j, Rat::one()));
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut o = unit_op(n, i, i, Rat::one());
        o[i + 1].push((i + 1, Rat::int(-1)));
        ops.push(o);
        labels.push(format!("H{}", i + 1));
    }
    (ops, labels)
}

/// φ_{e_i,e_j} basis of skew(V, φ): i < j, and also i = j when φ is skew.
pub fn skew_basis(f: &BilinForm) -> (Vec<Op>, Vec<String>) {
    let n = f.dim();
    let mut ops = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && f.sign == 1 {
                continue;
            }
            ops.push(phi_map(f, i, j));
            labels.push(format!("phi{}_{}", i + 1, j + 1));
        }
    }
    (ops, labels)
}

fn diagonal_combinations(span: &MatSpan) -> Vec<SpVec> {
    let n = span.size();
    let act = crate::algebra::ModuleAction::new(AntiAlg::zero(span.dim(), vec![String::new(); span.dim()]), n, span.basis().to_vec());
    crate::algebra::diagonal_elements(&act)
}

pub fn build_matrix_lie(spec: &MatrixLieSpec) -> Result<MatrixLie, AlgError> {
    let n = spec.dim;
    if n == 0 {
        return Err(AlgError::Invalid("dimension of V must be positive".into()));
    }
    let (ops, labels) = match spec.kind {
        MatrixKind::Gl => {
            let mut ops = Vec::new();
            let mut labels = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    ops.push(unit_op(n, i, j, Rat::one()));
                    labels.push(format!("E{}{}", i + 1, j + 1));
                }
            }
            (ops, labels)
        }
        MatrixKind::Sl => sl_basis(n),
        MatrixKind::So | MatrixKind::Sp => {
            let want = if spec.kind == MatrixKind::So { 1 } else { -1 };
            let f = spec.form.as_ref().ok_or_else(|| AlgError::Invalid("so/sp need a bilinear form".into()))?;
            if f.sign != want {
                return Err(AlgError::Invalid(format!("{:?} needs a form of sign {want}", spec.kind)));
            }
            if f.dim() != n || !f.is_nondegenerate() {
                return Err(AlgError::Invalid("form must be nondegenerate on V".into()));
            }
            skew_basis(f)
        }
    };
    if spec.form.is_some() && matches!(spec.kind, MatrixKind::Gl | MatrixKind::Sl) {
        return Err(AlgError::Invalid("gl/sl take no form".into()));
    }
    let mut span = MatSpan::new(ops, n).ok_or_else(|| AlgError::Invalid("basis matrices are dependent".into()))?;
    let algebra = span.lie_algebra(labels)?;
    let cartan = diagonal_combinations(&span);
    Ok(MatrixLie { algebra, span, cartan })
}

/// Trace-zero φ-symmetric maps, spanned by the symmetric maps
/// φ(e_i,·)e_j + εφ(e_j,·)e_i of trace zero and normalized differences of
/// the remaining ones.
pub struct Sym0Space {
    pub form: BilinForm,
    pub span: MatSpan,
    pub labels: Vec<String>,
}

impl Sym0Space {
    pub fn new(f: &BilinForm) -> Result<Sym0Space, AlgError> {
        if !f.is_nondegenerate() {
            return Err(AlgError::Invalid("form must be nondegenerate".into()));
        }
        let n = f.dim();
        let eps = f.sign as i64;
        let mut ops = Vec::new();
        let mut labels = Vec::new();
        let mut traced: Vec<(Op, Rat, String)> = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && eps == -1 {
                    continue;
                }
                let o = form_map(f, i, j, eps);
                let t = op::trace(&o);
                let l = format!("psi{}_{}", i + 1, j + 1);
                if t.is_zero() {
                    ops.push(o);
                    labels.push(l);
                } else {
                    traced.push((o, t, l));
                }
            }
        }
        for w in traced.windows(2) {
            let a = scale_op(&w[0].0, &w[0].1.recip());
            let b = scale_op(&w[1].0, &-w[1].1.recip());
            ops.push(add_ops(&a, &b));
            labels.push(format!("{}-{}", w[0].2, w[1].2));
        }
        let span = MatSpan::new(ops, n).ok_or_else(|| AlgError::Invalid("dependent symmetric maps".into()))?;
        Ok(Sym0Space { form: f.clone(), span, labels })
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// f•g = ½(fg + gf) as an operator on V.
    pub fn bullet(&self, f: &[SpVec], g: &[SpVec]) -> Op {
        let n = self.form.dim();
        scale_op(&add_ops(&op::compose(f, g, n), &op::compose(g, f, n)), &Rat::new(1, 2))
    }

    /// fg + gf − (2/n)tr(fg)1, which again lies in sym₀.
    pub fn adjusted(&mut self, f: &[SpVec], g: &[SpVec]) -> SpVec {
        let n = self.form.dim();
        let p = op::compose(f, g, n);
        let q = op::compose(g, f, n);
        let c = -(op::trace(&p) * Rat::new(2, n as i64));
        let mut s = add_ops(&p, &q);
        for (k, col) in s.iter_mut().enumerate() {
            *col = vector::add(col, &vec![(k, c.clone())]);
        }
        self.span.coords(&s).expect("trace-adjusted product leaves sym0")
    }

    /// Checks φ(f v, w) = φ(v, f w) and tr f = 0 for a basis element.
    pub fn is_symmetric_traceless(&self, s: usize) -> bool {
        let f = &self.span.basis()[s];
        let g = op::to_mat(f, self.form.dim());
        let gram = &self.form.gram;
        g.transpose().mul(gram) == gram.mul(&g) && g.trace().is_zero()
    }
}

/// An LY algebra from one of the families, with the m-part of a split Cartan
/// of its enveloping algebra and a flag for parameters outside the
/// irreducible range.
pub struct LyInstance {
    pub ly: LYAlg,
    pub m_cartan: Vec<SpVec>,
    pub reducible: bool,
}

/// Precomputed products of one tensor factor, in coordinates of its basis.
struct Factor {
    dim: usize,
    labels: Vec<String>,
    tr: Vec<Vec<Rat>>,
    comm: Option<Vec<Vec<SpVec>>>,
    adjusted: Option<Vec<Vec<SpVec>>>,
    double: Vec<Vec<Vec<SpVec>>>,
    diagonal: Vec<usize>,
}

impl Factor {
    fn new(mut span: MatSpan, labels: Vec<String>, with_comm: bool, with_adjusted: bool) -> Factor {
        let d = span.dim();
        let n = span.size();
        let b: Vec<Op> = span.basis().to_vec();
        let tr = (0..d).map(|i| (0..d).map(|j| op::trace(&op::compose(&b[i], &b[j], n))).collect()).collect();
        let comms: Vec<Vec<Op>> = (0..d).map(|i| (0..d).map(|j| op::commutator(&b[i], &b[j], n)).collect()).collect();
        let comm = with_comm.then(|| (0..d).map(|i| (0..d).map(|j| span.coords(&comms[i][j]).expect("commutator leaves the factor")).collect()).collect());
        let adjusted = with_adjusted.then(|| {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let p = op::compose(&b[i], &b[j], n);
                            let q = op::compose(&b[j], &b[i], n);
                            let c = -(op::trace(&p) * Rat::new(2, n as i64));
                            let mut s = add_ops(&p, &q);
                            for (k, col) in s.iter_mut().enumerate() {
                                *col = vector::add(col, &vec![(k, c.clone())]);
                            }
                            span.coords(&s).expect("trace-adjusted product leaves the factor")
                        })
                        .collect()
                })
                .collect()
        });
        let double = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| span.coords(&op::commutator(&comms[i][j], &b[k], n)).expect("[[x,y],z] leaves the factor")).collect())
                    .collect()
            })
            .collect();
        let diagonal = (0..d).filter(|&i| op::diagonal(&b[i]).is_some()).collect();
        Factor { dim: d, labels, tr, comm, adjusted, double, diagonal }
    }
}

fn tensor(x: &SpVec, y: &SpVec, dy: usize, c: &Rat, acc: &mut Accum) {
    for (i, a) in x {
        for (j, b) in y {
            acc.add(i * dy + j, &(c * a * b));
        }
    }
}

/// LY algebra on A⊗B with
/// (a⊗f)·(b⊗g) = ½[a,b]⊗J(f,g) + ½J(a,b)⊗[f,g] (terms present when defined),
/// [a⊗f, b⊗g, c⊗h] = α tr(fg)[[a,b],c]⊗h + β tr(ab) c⊗[[f,g],h].
fn tensor_ly(a: &Factor, b: &Factor, alpha: &Rat, beta: &Rat) -> LYAlg {
    let (da, db) = (a.dim, b.dim);
    let n = da * db;
    let half = Rat::new(1, 2);
    let labels = (0..n).map(|i| format!("{}|{}", a.labels[i / db], b.labels[i % db])).collect();
    let mut acc = Accum::new(n);
    let mut acc3 = Accum::new(n);
    LYAlg::from_fns(
        n,
        labels,
        |i, j| {
            let (a1, b1, a2, b2) = (i / db, i % db, j / db, j % db);
            if let (Some(ca), Some(jb)) = (&a.comm, &b.adjusted) {
                tensor(&ca[a1][a2], &jb[b1][b2], db, &half, &mut acc);
            }
            if let (Some(ja), Some(cb)) = (&a.adjusted, &b.comm) {
                tensor(&ja[a1][a2], &cb[b1][b2], db, &half, &mut acc);
            }
            acc.take()
        },
        |i, j, k| {
            let (a1, b1, a2, b2, a3, b3) = (i / db, i % db, j / db, j % db, k / db, k % db);
            let tb = &b.tr[b1][b2];
            if !tb.is_zero() {
                tensor(&a.double[a1][a2][a3], &vector::unit(b3), db, &(alpha * tb), &mut acc3);
            }
            let ta = &a.tr[a1][a2];
            if !ta.is_zero() {
                tensor(&vector::unit(a3), &b.double[b1][b2][b3], db, &(beta * ta), &mut acc3);
            }
            acc3.take()
        },
    )
}

fn tensor_cartan(a: &Factor, b: &Factor) -> Vec<SpVec> {
    let mut out = Vec::new();
    for &i in &a.diagonal {
        for &j in &b.diagonal {
            out.push(vector::unit(i * b.dim + j));
        }
    }
    out
}

/// Index u with φ(e_u, e_x) = 0 for x ≠ u and φ(e_u, e_u) ≠ 0.
fn anisotropic_axis(f: &BilinForm) -> Option<usize> {
    (0..f.dim()).find(|&u| !f.at(u, u).is_zero() && (0..f.dim()).all(|x| x == u || (f.at(u, x).is_zero() && f.at(x, u).is_zero())))
}

/// Lie triple system on V₁⊗V₂ with
/// [x₁⊗x₂, y₁⊗y₂, z₁⊗z₂] = φ₂(x₂,y₂)(φ₁)_{x₁,y₁}(z₁)⊗z₂ + φ₁(x₁,y₁) z₁⊗(φ₂)_{x₂,y₂}(z₂).
pub fn lts_orthosymplectic_sum(f1: &BilinForm, f2: &BilinForm) -> Result<LyInstance, AlgError> {
    if f1.sign != f2.sign {
        return Err(AlgError::Invalid("forms must share the same symmetry".into()));
    }
    if !f1.is_nondegenerate() || !f2.is_nondegenerate() {
        return Err(AlgError::Invalid("forms must be nondegenerate".into()));
    }
    let (n1, n2) = (f1.dim(), f2.dim());
    if n1 == 0 || n2 == 0 {
        return Err(AlgError::Invalid("spaces must be nonzero".into()));
    }
    let n = n1 * n2;
    let phi1: Vec<Vec<Op>> = (0..n1).map(|i| (0..n1).map(|j| phi_map(f1, i, j)).collect()).collect();
    let phi2: Vec<Vec<Op>> = (0..n2).map(|i| (0..n2).map(|j| phi_map(f2, i, j)).collect()).collect();
    let labels = (0..n).map(|i| format!("v{}|w{}", i / n2 + 1, i % n2 + 1)).collect();
    let mut acc = Accum::new(n);
    let ly = LYAlg::from_fns(
        n,
        labels,
        |_, _| Vec::new(),
        |i, j, k| {
            let (x1, x2, y1, y2, z1, z2) = (i / n2, i % n2, j / n2, j % n2, k / n2, k % n2);
            let c2 = f2.at(x2, y2);
            if !c2.is_zero() {
                tensor(&phi1[x1][y1][z1], &vector::unit(z2), n2, c2, &mut acc);
            }
            let c1 = f1.at(x1, y1);
            if !c1.is_zero() {
                tensor(&vector::unit(z1), &phi2[x2][y2][z2], n2, c1, &mut acc);
            }
            acc.take()
        },
    );
    let (lo, hi) = (n1.min(n2), n1.max(n2));
    let reducible = f1.sign == 1 && ((lo == 1 && hi <= 2) || lo == 2);
    let mut m_cartan = Vec::new();
    if f1.sign == 1 && n1 % 2 == 1 && n2 % 2 == 1 {
        if let (Some(u1), Some(u2)) = (anisotropic_axis(f1), anisotropic_axis(f2)) {
            if (-(f1.at(u1, u1) * f2.at(u2, u2))).sqrt().is_some() {
                m_cartan.push(vector::unit(u1 * n2 + u2));
            }
        }
    }
    Ok(LyInstance { ly, m_cartan, reducible })
}

/// LY algebra on sl(V₁)⊗sym₀(V₂) for a 2-dimensional symplectic V₁, with
/// (a⊗f)·(b⊗g) = ½[a,b]⊗(fg+gf−(2/n)tr(fg)1) and
/// [a⊗f, b⊗g, c⊗h] = (1/n)tr(fg)[[a,b],c]⊗h + ½tr(ab)c⊗[[f,g],h].
pub fn ly_sp_tensor_sym(f1: &BilinForm, f2: &BilinForm) -> Result<LyInstance, AlgError> {
    if f1.dim() != 2 || f1.sign != -1 || !f1.is_nondegenerate() {
        return Err(AlgError::Invalid("V1 must be a 2-dimensional symplectic space".into()));
    }
    let n = f2.dim();
    let ok = match f2.sign {
        -1 => n % 2 == 0 && n >= 4,
        _ => n >= 3,
    };
    if !ok {
        return Err(AlgError::Invalid(format!("V2 of dimension {n} with sign {} is outside the admissible range", f2.sign)));
    }
    let (ops, labels) = skew_basis(f1);
    let a = Factor::new(MatSpan::new(ops, 2).expect("independent"), labels, true, false);
    let s = Sym0Space::new(f2)?;
    let b = Factor::new(s.span, s.labels, false, true);
    let ly = tensor_ly(&a, &b, &Rat::new(1, n as i64), &Rat::new(1, 2));
    Ok(LyInstance { m_cartan: tensor_cartan(&a, &b), ly, reducible: false })
}

/// LY algebra on sl(V₁)⊗sl(V₂) with
/// (a⊗f)·(b⊗g) = ½[a,b]⊗(fg+gf−(2/n₂)tr(fg)1) + ½(ab+ba−(2/n₁)tr(ab)1)⊗[f,g] and
/// [a⊗f, b⊗g, c⊗h] = (1/n₂)tr(fg)[[a,b],c]⊗h + (1/n₁)tr(ab)c⊗[[f,g],h].
pub fn ly_sl_tensor_sl(n1: usize, n2: usize) -> Result<LyInstance, AlgError> {
    if n1 < 2 || n2 < n1 {
        return Err(AlgError::Invalid(format!("need 2 <= n1 <= n2, got ({n1}, {n2})")));
    }
    let factor = |n: usize| {
        let (ops, labels) = sl_basis(n);
        Factor::new(MatSpan::new(ops, n).expect("independent"), labels, true, true)
    };
    let (a, b) = (factor(n1), factor(n2));
    let ly = tensor_ly(&a, &b, &Rat::new(1, n2 as i64), &Rat::new(1, n1 as i64));
    Ok(LyInstance { m_cartan: tensor_cartan(&a, &b), ly, reducible: false })
}

/// Gram matrix of c·tr(xy) on a matrix span.
pub fn trace_form(span: &MatSpan, c: &Rat) -> Mat {
    let n = span.size();
    let b = span.basis();
    Mat::from_fn(b.len(), b.len(), |i, j| c * &op::trace(&op::compose(&b[i], &b[j], n)))
}

/// sl(V₁) for 2-dimensional symplectic V₁ on the basis used by
/// `ly_sp_tensor_sym`.
pub fn sp2_span() -> MatSpan {
    MatSpan::new(skew_basis(&BilinForm::split(2, -1, 0)).0, 2).expect("independent")
}

/// sl(V) on the basis used by `ly_sl_tensor_sl`.
pub fn sl_span(n: usize) -> MatSpan {
    MatSpan::new(sl_basis(n).0, n).expect("independent")
}

/// True iff the map with matrix `map` (columns: images of a's basis in b's
/// basis) carries the products of `a` onto those of `b`.
pub fn check_coincidence(a: &LYAlg, b: &LYAlg, map: &Mat) -> Result<bool, AlgError> {
    let n = a.dim();
    if b.dim() != n || map.rows() != n || map.cols() != n {
        return Err(AlgError::Invalid("dimension mismatch".into()));
    }
    let inv = inverse(map).map_err(|_| AlgError::Invalid("basis map is not invertible".into()))?;
    let cols: Vec<SpVec> = (0..n).map(|k| map.sparse_col(k)).collect();
    let icols: Vec<SpVec> = (0..n).map(|k| inv.sparse_col(k)).collect();
    let t = a.transport(&cols, &icols, b.labels().to_vec());
    Ok(&t == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_lie, check_ly, classify_simple_type, commutant_dim, enveloping, enveloping_cartan, inner_derivations};

    #[test]
    fn dimensions() {
        assert_eq!(build_matrix_lie(&MatrixLieSpec::sl(2)).unwrap().algebra.dim(), 3);
        assert_eq!(build_matrix_lie(&MatrixLieSpec::so(5)).unwrap().algebra.dim(), 10);
        assert_eq!(build_matrix_lie(&MatrixLieSpec::sp(6)).unwrap().algebra.dim(), 21);
        assert!(build_matrix_lie(&MatrixLieSpec::sp(5)).is_err());
    }

    #[test]
    fn split_cartans_classify() {
        for (spec, ty) in [(MatrixLieSpec::sl(3), "A2"), (MatrixLieSpec::so(5), "B2"), (MatrixLieSpec::sp(6), "C3"), (MatrixLieSpec::so(8), "D4")] {
            let m = build_matrix_lie(&spec).unwrap();
            assert!(check_lie(&m.algebra).ok);
            assert_eq!(classify_simple_type(&m.algebra, &m.cartan).unwrap().to_string(), ty);
        }
    }

    #[test]
    fn sym0_basis_is_symmetric() {
        for f in [BilinForm::split(4, -1, 0), BilinForm::split(5, 1, 1), BilinForm::split(4, 1, 1)] {
            let s = Sym0Space::new(&f).unwrap();
            let n = f.dim() as i64;
            let expect = if f.sign == 1 { n * (n + 1) / 2 - 1 } else { n * (n - 1) / 2 - 1 };
            assert_eq!(s.dim() as i64, expect);
            assert!((0..s.dim()).all(|i| s.is_symmetric_traceless(i)));
        }
    }

    #[test]
    fn orthosymplectic_sum_so8() {
        let inst = lts_orthosymplectic_sum(&BilinForm::split(3, 1, 1), &BilinForm::split(5, 1, -1)).unwrap();
        assert!(!inst.reducible);
        assert!(inst.ly.is_binary_zero());
        assert!(check_ly(&inst.ly).ok());
        let env = enveloping(&inst.ly).unwrap();
        assert_eq!(env.g().dim(), 28);
        assert_eq!(commutant_dim(&inner_derivations(&inst.ly).unwrap()), 1);
        let cartan = enveloping_cartan(&env, &inst.m_cartan);
        assert_eq!(classify_simple_type(env.g(), &cartan).unwrap().to_string(), "D4");
    }

    #[test]
    fn sl_tensor_sl_2_3() {
        let inst = ly_sl_tensor_sl(2, 3).unwrap();
        assert_eq!(inst.ly.dim(), 24);
        assert!(check_ly(&inst.ly).ok());
        let env = enveloping(&inst.ly).unwrap();
        assert_eq!(env.h_dim(), 11);
        let cartan = enveloping_cartan(&env, &inst.m_cartan);
        assert_eq!(classify_simple_type(env.g(), &cartan).unwrap().to_string(), "A5");
    }

    #[test]
    fn sp_tensor_sym_cases() {
        let sp2 = BilinForm::split(2, -1, 0);
        for (f2, genv, ty) in [(BilinForm::split(3, 1, 1), 21, "C3"), (BilinForm::split(4, -1, 0), 28, "D4"), (BilinForm::split(4, 1, 1), 36, "C4")] {
            let inst = ly_sp_tensor_sym(&sp2, &f2).unwrap();
            assert!(check_ly(&inst.ly).ok());
            let env = enveloping(&inst.ly).unwrap();
            assert_eq!(env.g().dim(), genv);
            let cartan = enveloping_cartan(&env, &inst.m_cartan);
            assert_eq!(classify_simple_type(env.g(), &cartan).unwrap().to_string(), ty);
        }
        let zero = ly_sp_tensor_sym(&sp2, &BilinForm::split(4, -1, 0)).unwrap();
        assert!(zero.ly.is_binary_zero());
        assert!(ly_sp_tensor_sym(&sp2, &BilinForm::split(2, 1, 1)).is_err());
    }

    #[test]
    fn coincidences() {
        let id = |n| Mat::identity(n);
        let a = ly_sp_tensor_sym(&BilinForm::split(2, -1, 0), &BilinForm::split(4, -1, 0)).unwrap().ly;
        let w1 = BilinForm::new(trace_form(&sp2_span(), &Rat::one()), 1).unwrap();
        let s0 = Sym0Space::new(&BilinForm::split(4, -1, 0)).unwrap();
        let w2 = BilinForm::new(trace_form(&s0.span, &Rat::new(-1, 2)), 1).unwrap();
        let b = lts_orthosymplectic_sum(&w1, &w2).unwrap().ly;
        assert!(check_coincidence(&a, &b, &id(15)).unwrap());
        let c = ly_sl_tensor_sl(2, 2).unwrap().ly;
        assert!(c.is_binary_zero());
        let t = BilinForm::new(trace_form(&sl_span(2), &Rat::one()), 1).unwrap();
        let mt = BilinForm::new(trace_form(&sl_span(2), &Rat::int(-1)), 1).unwrap();
        let d = lts_orthosymplectic_sum(&t, &mt).unwrap().ly;
        assert!(check_coincidence(&c, &d, &id(9)).unwrap());
        assert!(!check_coincidence(&c, &d, &id(9).scale(&Rat::int(2))).unwrap());
        assert!(check_coincidence(&a, &a, &id(15)).unwrap());
    }
}
