//! Reductive pairs, the standard enveloping Lie algebra, and the LY
//! products induced by a reductive decomposition.

use super::anti::AntiAlg;
use super::check::{check_ly, LyReport};
use super::error::AlgError;
use super::inner::InnerSpan;
use super::killing::killing_gram;
use super::ly::LYAlg;
use super::module::ModuleAction;
use crate::linalg::op::Op;
use crate::linalg::vector::{self, SpVec};
use crate::linalg::{inverse, BasisCoords, Echelon, Mat};
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct ReductivePair {
    pub g: AntiAlg,
    pub h_basis: Vec<SpVec>,
    pub m_basis: Vec<SpVec>,
    pub proj_h: Mat,
    pub proj_m: Mat,
}

fn is_unit(v: &SpVec) -> Option<usize> {
    match v.as_slice() {
        [(i, x)] if x.is_one() => Some(*i),
        _ => None,
    }
}

impl ReductivePair {
    /// Builds projectors from complementary bases.
    pub fn new(g: AntiAlg, h_basis: Vec<SpVec>, m_basis: Vec<SpVec>) -> Result<ReductivePair, AlgError> {
        let n = g.dim();
        if h_basis.len() + m_basis.len() != n {
            return Err(AlgError::Invalid(format!("dim h + dim m = {} != dim g = {n}", h_basis.len() + m_basis.len())));
        }
        let all: Vec<SpVec> = h_basis.iter().chain(&m_basis).cloned().collect();
        let r = h_basis.len();
        let (proj_h, proj_m) = if all.iter().all(|v| is_unit(v).is_some()) {
            let mut ph = Mat::zeros(n, n);
            let mut pm = Mat::zeros(n, n);
            for (pos, v) in all.iter().enumerate() {
                let i = is_unit(v).unwrap();
                if pos < r {
                    ph.set(i, i, Rat::one());
                } else {
                    pm.set(i, i, Rat::one());
                }
            }
            (ph, pm)
        } else {
            let p = Mat::from_sparse_cols(n, &all);
            let pinv = inverse(&p).map_err(|_| AlgError::Invalid("h + m is not direct".into()))?;
            let mut dh = Mat::zeros(n, n);
            for i in 0..r {
                dh.set(i, i, Rat::one());
            }
            let ph = p.mul(&dh).mul(&pinv);
            let pm = Mat::identity(n).sub(&ph);
            (ph, pm)
        };
        Ok(ReductivePair { g, h_basis, m_basis, proj_h, proj_m })
    }
}

/// g(m) together with its decomposition and the inner-derivation action.
pub struct Enveloping {
    pub pair: ReductivePair,
    pub inner: ModuleAction,
    span: InnerSpan,
}

impl Enveloping {
    pub fn g(&self) -> &AntiAlg {
        &self.pair.g
    }

    pub fn h_dim(&self) -> usize {
        self.pair.h_basis.len()
    }

    pub fn m_dim(&self) -> usize {
        self.pair.m_basis.len()
    }

    /// Coordinates in g(m) of an inner derivation given as an operator on m.
    pub fn embed_op(&mut self, o: &Op) -> Option<SpVec> {
        self.span.coords(o)
    }

    /// Coordinates in g(m) of an element of m.
    pub fn embed_m(&self, v: &SpVec) -> SpVec {
        let r = self.h_dim();
        v.iter().map(|(i, x)| (i + r, x.clone())).collect()
    }
}

/// Standard enveloping Lie algebra; verifies the LY axioms first.
pub fn enveloping(a: &LYAlg) -> Result<Enveloping, AlgError> {
    let rep: LyReport = check_ly(a);
    if let Some(bad) = rep.axioms.iter().find(|x| !x.ok) {
        let tuple = bad.violation.as_ref().map(|v| v.tuple.clone()).unwrap_or_default();
        return Err(AlgError::NotLy { axiom: bad.name, tuple });
    }
    enveloping_unchecked(a)
}

/// Standard enveloping Lie algebra without the axiom check; fails only if
/// the inner derivations do not close.
pub fn enveloping_unchecked(a: &LYAlg) -> Result<Enveloping, AlgError> {
    let n = a.dim();
    let mut span = InnerSpan::from_ly(a);
    let inner = span.module().map_err(|(s, t)| AlgError::NotClosed(format!("[D{s}, D{t}] leaves the inner-derivation span")))?;
    let r = span.dim();
    let mut labels: Vec<String> = inner.algebra.labels().to_vec();
    labels.extend(a.labels().iter().cloned());
    let mut g = AntiAlg::zero(r + n, labels);
    for (s, t, v) in inner.algebra.entries() {
        g.set(s, t, v.clone());
    }
    for s in 0..r {
        for k in 0..n {
            let img = &inner.action[s][k];
            if !img.is_empty() {
                g.set(s, r + k, img.iter().map(|(l, x)| (l + r, x.clone())).collect());
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = span.kappa_upper(i, j).clone();
            v.extend(a.binary_upper(i, j).iter().map(|(l, x)| (l + r, x.clone())));
            if !v.is_empty() {
                g.set(r + i, r + j, v);
            }
        }
    }
    let h_basis = (0..r).map(vector::unit).collect();
    let m_basis = (r..r + n).map(vector::unit).collect();
    let pair = ReductivePair::new(g, h_basis, m_basis)?;
    Ok(Enveloping { pair, inner, span })
}

/// x·y = π_m[x,y] and [x,y,z] = [π_h[x,y], z], in coordinates of m_basis.
pub fn ly_from_reductive(p: &ReductivePair) -> Result<LYAlg, AlgError> {
    let g = &p.g;
    let n = g.dim();
    let m = p.m_basis.len();
    let h_units: Option<Vec<usize>> = p.h_basis.iter().map(is_unit).collect();
    let m_units: Option<Vec<usize>> = p.m_basis.iter().map(is_unit).collect();
    let labels: Vec<String> = match &m_units {
        Some(us) => us.iter().map(|&i| g.labels()[i].clone()).collect(),
        None => (0..m).map(|i| format!("m{i}")).collect(),
    };
    // coordinates: split a g-vector into (h part in g, m coords)
    let split: Box<dyn Fn(&SpVec) -> (SpVec, SpVec)> = match (&h_units, &m_units) {
        (Some(_), Some(mu)) => {
            let mut pos = vec![usize::MAX; n];
            for (k, &i) in mu.iter().enumerate() {
                pos[i] = k;
            }
            Box::new(move |v: &SpVec| {
                let mut hp = Vec::new();
                let mut mp = Vec::new();
                for (i, x) in v {
                    if pos[*i] == usize::MAX {
                        hp.push((*i, x.clone()));
                    } else {
                        mp.push((pos[*i], x.clone()));
                    }
                }
                mp.sort_by_key(|e| e.0);
                (hp, mp)
            })
        }
        _ => {
            let all: Vec<SpVec> = p.h_basis.iter().chain(&p.m_basis).cloned().collect();
            let r = p.h_basis.len();
            let bc = std::sync::Mutex::new(BasisCoords::new(&all, n).ok_or_else(|| AlgError::Invalid("h + m is not direct".into()))?);
            let hb = p.h_basis.clone();
            Box::new(move |v: &SpVec| {
                let c = bc.lock().unwrap().coords(v).expect("h + m spans g");
                let mut hp = Vec::new();
                let mut mp = Vec::new();
                for (i, x) in c {
                    if i < r {
                        hp = vector::axpy(&hp, &x, &hb[i]);
                    } else {
                        mp.push((i - r, x));
                    }
                }
                (hp, mp)
            })
        }
    };
    // [h, m] ⊆ m
    for (s, hv) in p.h_basis.iter().enumerate() {
        for (k, mv) in p.m_basis.iter().enumerate() {
            let (hp, _) = split(&g.bracket(hv, mv));
            if !hp.is_empty() {
                return Err(AlgError::NotClosed(format!("[h{s}, m{k}] has a nonzero h-component")));
            }
        }
    }
    let mut out = LYAlg::zero(m, labels);
    for i in 0..m {
        for j in i + 1..m {
            let (hp, mp) = split(&g.bracket(&p.m_basis[i], &p.m_basis[j]));
            out.set_binary(i, j, mp);
            if hp.is_empty() {
                continue;
            }
            for k in 0..m {
                let (_, t) = split(&g.bracket(&hp, &p.m_basis[k]));
                out.set_ternary(i, j, k, t);
            }
        }
    }
    Ok(out)
}

/// Killing-orthogonal complement of h in g.
pub fn orthogonal_complement(p: &ReductivePair) -> Result<Vec<SpVec>, AlgError> {
    let n = p.g.dim();
    if !super::check::is_lie(&p.g) {
        let v = super::check::check_lie(&p.g).violation.map(|v| v.tuple).unwrap_or_default();
        return Err(AlgError::NotLie(v));
    }
    let k = killing_gram(&p.g);
    let mut e = Echelon::new(n);
    for h in &p.h_basis {
        // row hᵀK
        let mut row = vec![Rat::zero(); n];
        for (i, x) in h {
            for (j, y) in row.iter_mut().enumerate() {
                let kij = k.get(*i, j);
                if !kij.is_zero() {
                    *y += x * kij;
                }
            }
        }
        e.insert(&vector::from_dense(&row));
    }
    let comp = e.null_space();
    // direct iff h ∩ h^⊥ = 0
    let mut all = Echelon::new(n);
    for v in p.h_basis.iter().chain(&comp) {
        all.insert(v);
    }
    if all.rank() != n {
        return Err(AlgError::Degenerate);
    }
    Ok(comp)
}

/// Split Cartan of g(m): the inner derivations acting diagonally on m,
/// together with the given commuting elements of m.
pub fn enveloping_cartan(env: &Enveloping, m_cartan: &[SpVec]) -> Vec<SpVec> {
    let mut out = super::centroid::diagonal_elements(&env.inner);
    out.extend(m_cartan.iter().map(|v| env.embed_m(v)));
    out
}

/// Equality of spans.
pub fn same_span(a: &[SpVec], b: &[SpVec], n: usize) -> bool {
    let mut ea = Echelon::new(n);
    for v in a {
        ea.insert(v);
    }
    let mut eb = Echelon::new(n);
    for v in b {
        eb.insert(v);
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.coords(v).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check::check_lie;
    use crate::algebra::examples::sl2;

    fn adjoint_lts() -> LYAlg {
        let g = sl2();
        LYAlg::from_fns(3, g.labels().to_vec(), |_, _| Vec::new(), |i, j, k| g.bracket(&g.get(i, j), &vector::unit(k)))
    }

    #[test]
    fn enveloping_round_trip() {
        let l = adjoint_lts();
        let env = enveloping(&l).unwrap();
        assert_eq!(env.g().dim(), 6);
        assert!(check_lie(env.g()).ok);
        assert_eq!(ly_from_reductive(&env.pair).unwrap(), l);
    }

    #[test]
    fn zero_complement() {
        let g = sl2();
        let p = ReductivePair::new(g.clone(), (0..3).map(vector::unit).collect(), vec![]).unwrap();
        let l = ly_from_reductive(&p).unwrap();
        assert_eq!(l.dim(), 0);
        assert!(orthogonal_complement(&p).unwrap().is_empty());
    }

    #[test]
    fn diagonal_copy_gives_adjoint_lts() {
        let s = sl2();
        let g = s.direct_sum(&s);
        let h: Vec<SpVec> = (0..3).map(|i| vec![(i, Rat::one()), (i + 3, Rat::one())]).collect();
        let m: Vec<SpVec> = (0..3).map(|i| vec![(i, Rat::one()), (i + 3, Rat::int(-1))]).collect();
        let p = ReductivePair::new(g, h.clone(), m.clone()).unwrap();
        let l = ly_from_reductive(&p).unwrap();
        assert!(l.is_binary_zero());
        assert!(check_ly(&l).ok());
        assert!(same_span(&orthogonal_complement(&p).unwrap(), &m, 6));
    }
}
