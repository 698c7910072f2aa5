//! Symplectic triple systems through their Z₂-graded Lie algebras
//! g(T) = sp(V) ⊕ (V⊗T) ⊕ Inder(T) with V = span(v₊, v₋), φ(v₊, v₋) = 1,
//! and the Lie triple systems on V⊗T.

pub mod tj;

pub use tj::{construct_tj, cubic_jordan, CubicJordan, TjSolution, TJ_CATALOG};

use crate::algebra::span::OpSpan;
use crate::algebra::{check_lie, diagonal_elements, AlgError, AntiAlg, LYAlg, ModuleAction, ReductivePair};
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::BilinForm;
use crate::matrix::MatSpan;
use crate::rat::Rat;

/// A trilinear product {xyz} and a skew form (x, y) on T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticTripleData {
    pub labels: Vec<String>,
    pub form: BilinForm,
    /// {e_x e_y e_z} at (x·n + y)·n + z.
    triple: Vec<SpVec>,
}

impl SymplecticTripleData {
    /// Checks the form is skew and nonzero; validity of the triple is the
    /// Jacobi certificate on g(T), see `validate`.
    pub fn new(labels: Vec<String>, form: BilinForm, mut triple: impl FnMut(usize, usize, usize) -> SpVec) -> Result<SymplecticTripleData, AlgError> {
        let n = labels.len();
        if form.dim() != n {
            return Err(AlgError::Invalid(format!("form has dimension {} but T has {n}", form.dim())));
        }
        if form.sign != -1 {
            return Err(AlgError::Invalid("the form must be skew-symmetric".into()));
        }
        if form.gram.is_zero() {
            return Err(AlgError::Invalid("the form must be nonzero".into()));
        }
        let mut t = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    t.push(triple(x, y, z));
                }
            }
        }
        Ok(SymplecticTripleData { labels, form, triple: t })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn triple(&self, x: usize, y: usize, z: usize) -> &SpVec {
        let n = self.dim();
        &self.triple[(x * n + y) * n + z]
    }

    /// d_{x,y} = {x y ·}.
    pub fn d_op(&self, x: usize, y: usize) -> Op {
        (0..self.dim()).map(|z| self.triple(x, y, z).clone()).collect()
    }

    pub fn is_triple_zero(&self) -> bool {
        self.triple.iter().all(|v| v.is_empty())
    }

    /// Builds g(T) and runs the Jacobi certificate.
    pub fn validate(&self) -> Result<GOfT, AlgError> {
        if self.is_triple_zero() {
            return Err(AlgError::Invalid("the triple product is zero".into()));
        }
        let g = build_g_of_t(self)?;
        let r = check_lie(&g.algebra);
        match r.violation {
            None => Ok(g),
            Some(v) => Err(AlgError::NotLie(v.tuple)),
        }
    }
}

/// g(T) with its grading: sp(V) at 0..3, V⊗T at 3 + u·n + x (u = 0 for v₊,
/// 1 for v₋), Inder(T) last.
pub struct GOfT {
    pub algebra: AntiAlg,
    pub t_dim: usize,
    pub inder: ModuleAction,
    pub cartan: Vec<SpVec>,
    inder_span: OpSpan,
}

/// φ(v_u, v_w) with φ(v₊, v₋) = 1.
fn phi(u: usize, w: usize) -> Rat {
    match (u, w) {
        (0, 1) => Rat::one(),
        (1, 0) => Rat::int(-1),
        _ => Rat::zero(),
    }
}

/// φ_{u,v} = φ(u,·)v + φ(v,·)u on V.
fn phi_uv(u: usize, v: usize) -> Op {
    (0..2)
        .map(|w| {
            let mut acc = Vec::new();
            let a = phi(u, w);
            if !a.is_zero() {
                acc.push((v, a));
            }
            let b = phi(v, w);
            if !b.is_zero() {
                acc.push((u, b));
            }
            vector::collect(acc)
        })
        .collect()
}

/// Coordinates of φ_{u,v} in the basis φ₊₊, φ₊₋, φ₋₋.
fn phi_index(u: usize, v: usize) -> usize {
    u + v
}

impl GOfT {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn inder_dim(&self) -> usize {
        self.inder.algebra.dim()
    }

    pub fn odd_index(&self, u: usize, x: usize) -> usize {
        3 + u * self.t_dim + x
    }

    /// (sp(V) ⊕ Inder(T), V⊗T).
    pub fn reductive_pair(&self) -> Result<ReductivePair, AlgError> {
        let n = self.dim();
        let odd = 3..3 + 2 * self.t_dim;
        let h = (0..n).filter(|i| !odd.contains(i)).map(vector::unit).collect();
        let m = odd.map(vector::unit).collect();
        ReductivePair::new(self.algebra.clone(), h, m)
    }

    /// d_{x,y} read back from [v₊⊗x, v₋⊗y] with the sp(V) part stripped.
    pub fn recovered_d(&self, x: usize, y: usize) -> Op {
        let off = 3 + 2 * self.t_dim;
        let v = self.algebra.get(self.odd_index(0, x), self.odd_index(1, y));
        let c: SpVec = v.into_iter().filter(|e| e.0 >= off).map(|(i, c)| (i - off, c)).collect();
        op::combine(self.inder_span.basis(), &c, self.t_dim)
    }
}

/// Assembles g(T); fails if the d-span is not closed under commutators.
pub fn build_g_of_t(t: &SymplecticTripleData) -> Result<GOfT, AlgError> {
    let n = t.dim();
    let ds: Vec<Op> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).map(|(x, y)| t.d_op(x, y)).collect();
    let mut span = OpSpan::new(ds, n);
    let inder = span.module("d").map_err(|(s, u)| AlgError::NotClosed(format!("[d{s}, d{u}] leaves the span of the d-maps")))?;
    let r = inder.algebra.dim();
    let dim = 3 + 2 * n + r;
    let off = 3 + 2 * n;
    let mut dcoords: Vec<Vec<SpVec>> = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            dcoords[x][y] = span.coords(&t.d_op(x, y)).ok_or_else(|| AlgError::NotClosed("d-map outside its span".into()))?;
        }
    }
    let mut sp = MatSpan::new(vec![phi_uv(0, 0), phi_uv(0, 1), phi_uv(1, 1)], 2).expect("φ-maps are independent");
    let spv = sp.lie_algebra(vec!["phi++".into(), "phi+-".into(), "phi--".into()])?;
    let mut labels: Vec<String> = spv.labels().to_vec();
    for u in ["+", "-"] {
        for l in &t.labels {
            labels.push(format!("v{u}|{l}"));
        }
    }
    labels.extend(inder.algebra.labels().iter().cloned());
    let mut g = AntiAlg::zero(dim, labels);
    for (s, u, v) in spv.entries() {
        g.set(s, u, v.clone());
    }
    for (s, u, v) in inder.algebra.entries() {
        g.set(off + s, off + u, v.iter().map(|(i, c)| (off + i, c.clone())).collect());
    }
    let odd = |u: usize, x: usize| 3 + u * n + x;
    for (s, o) in sp.basis().iter().enumerate() {
        for u in 0..2 {
            for x in 0..n {
                let img: SpVec = o[u].iter().map(|(w, c)| (odd(*w, x), c.clone())).collect();
                if !img.is_empty() {
                    g.set(s, odd(u, x), vector::collect(img));
                }
            }
        }
    }
    for (s, o) in inder.action.iter().enumerate() {
        for u in 0..2 {
            for x in 0..n {
                let img: SpVec = o[x].iter().map(|(y, c)| (odd(u, *y), c.clone())).collect();
                if !img.is_empty() {
                    g.set(off + s, odd(u, x), img);
                }
            }
        }
    }
    let mut acc = Accum::new(dim);
    for p in 0..2 * n {
        let (u, x) = (p / n, p % n);
        for q in p + 1..2 * n {
            let (v, y) = (q / n, q % n);
            let f = t.form.at(x, y);
            if !f.is_zero() {
                acc.add(phi_index(u, v), f);
            }
            let c = phi(u, v);
            if !c.is_zero() {
                for (i, a) in &dcoords[x][y] {
                    acc.add(off + i, &(&c * a));
                }
            }
            let w = acc.take();
            if !w.is_empty() {
                g.set(odd(u, x), odd(v, y), w);
            }
        }
    }
    let mut cartan = vec![vector::unit(phi_index(0, 1))];
    cartan.extend(diagonal_elements(&inder).into_iter().map(|v| v.into_iter().map(|(i, c)| (off + i, c)).collect()));
    Ok(GOfT { algebra: g, t_dim: n, inder, cartan, inder_span: span })
}

/// The Lie triple system on V⊗T:
/// [u⊗x, v⊗y, w⊗z] = (x,y)φ_{u,v}(w)⊗z + φ(u,v) w⊗{xyz}.
pub fn lts_from_symplectic(t: &SymplecticTripleData) -> LYAlg {
    let n = t.dim();
    let mut labels = Vec::with_capacity(2 * n);
    for u in ["+", "-"] {
        for l in &t.labels {
            labels.push(format!("v{u}|{l}"));
        }
    }
    let maps: Vec<Vec<Op>> = (0..2).map(|u| (0..2).map(|v| phi_uv(u, v)).collect()).collect();
    let mut acc = Accum::new(2 * n);
    LYAlg::from_fns(
        2 * n,
        labels,
        |_, _| Vec::new(),
        |p, q, s| {
            let (u, x, v, y, w, z) = (p / n, p % n, q / n, q % n, s / n, s % n);
            let f = t.form.at(x, y);
            if !f.is_zero() {
                for (w2, c) in &maps[u][v][w] {
                    acc.add(w2 * n + z, &(f * c));
                }
            }
            let c = phi(u, v);
            if !c.is_zero() {
                for (z2, a) in t.triple(x, y, z) {
                    acc.add(w * n + z2, &(&c * a));
                }
            }
            acc.take()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_ly, classify_simple_type, classify_type, ly_from_reductive};

    fn tk() -> SymplecticTripleData {
        construct_tj(&cubic_jordan("k").unwrap()).unwrap().data
    }

    #[test]
    fn phi_maps_span_sp2() {
        assert_eq!(phi_uv(0, 1), vec![vec![(0, Rat::int(-1))], vec![(1, Rat::one())]]);
        assert_eq!(phi_uv(0, 0), vec![Vec::new(), vec![(0, Rat::int(2))]]);
    }

    #[test]
    fn g2_from_tk() {
        let t = tk();
        assert_eq!(t.dim(), 4);
        let g = t.validate().unwrap();
        assert_eq!(g.dim(), 14);
        assert_eq!(g.inder_dim(), 3);
        assert_eq!(classify_simple_type(&g.algebra, &g.cartan).unwrap().to_string(), "G2");
        let inder_cartan = diagonal_elements(&g.inder);
        assert_eq!(classify_type(&g.inder.algebra, &inder_cartan).unwrap().to_string(), "A1");
    }

    #[test]
    fn lts_matches_reductive_pair() {
        let t = tk();
        let g = build_g_of_t(&t).unwrap();
        let lts = lts_from_symplectic(&t);
        assert!(lts.is_binary_zero());
        assert_eq!(lts, ly_from_reductive(&g.reductive_pair().unwrap()).unwrap());
        assert!(check_ly(&lts).ok());
    }

    #[test]
    fn d_maps_round_trip() {
        let t = tk();
        let g = build_g_of_t(&t).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(g.recovered_d(x, y), t.d_op(x, y));
            }
        }
    }

    #[test]
    fn zero_triple_is_rejected() {
        let t = SymplecticTripleData::new(tk().labels, BilinForm::split(4, -1, 0), |_, _, _| Vec::new()).unwrap();
        assert!(t.validate().is_err());
        assert!(!check_lie(&build_g_of_t(&t).unwrap().algebra).ok);
    }

    #[test]
    fn symmetric_form_is_rejected() {
        assert!(SymplecticTripleData::new(vec!["a".into(), "b".into()], BilinForm::split(2, 1, 1), |_, _, _| Vec::new()).is_err());
    }

    #[test]
    fn corrupted_constant_breaks_jacobi() {
        let g = tk().validate().unwrap();
        for (i, j, v) in g.algebra.entries().take(40).collect::<Vec<_>>() {
            let mut bad = g.algebra.clone();
            let mut w = v.clone();
            w[0].1 += Rat::one();
            bad.set(i, j, vector::collect(w));
            assert!(!check_lie(&bad).ok, "({i}, {j})");
        }
    }
}
