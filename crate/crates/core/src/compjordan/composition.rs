//! The split unital composition algebras k, K = k×k, Q = Mat₂(k) and the
//! split octonions O (Zorn vector matrices).
//!
//! Bases start with 1 followed by trace-zero weight vectors, so the
//! normalized trace of x is its first coordinate.

use std::fmt;
use std::str::FromStr;

use super::unital::UnitalAlg;
use crate::algebra::AlgError;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, SpVec};
use crate::linalg::{inverse, Mat};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompKind {
    K1,
    K,
    Q,
    O,
}

impl CompKind {
    pub const ALL: [CompKind; 4] = [CompKind::K1, CompKind::K, CompKind::Q, CompKind::O];

    pub fn dim(self) -> usize {
        match self {
            CompKind::K1 => 1,
            CompKind::K => 2,
            CompKind::Q => 4,
            CompKind::O => 8,
        }
    }
}

impl fmt::Display for CompKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompKind::K1 => "k",
            CompKind::K => "K",
            CompKind::Q => "Q",
            CompKind::O => "O",
        })
    }
}

impl FromStr for CompKind {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<CompKind, AlgError> {
        match s.trim() {
            "k" => Ok(CompKind::K1),
            "K" => Ok(CompKind::K),
            "Q" => Ok(CompKind::Q),
            "O" => Ok(CompKind::O),
            o => Err(AlgError::Invalid(format!("unknown composition algebra {o:?} (expected k, K, Q or O)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompAlg {
    pub kind: CompKind,
    pub alg: UnitalAlg,
    /// Polar form n(x, y) = n(x+y) − n(x) − n(y).
    pub norm: Mat,
}

// Concrete models: multiplication, norm, and the basis in model coordinates.
struct Model {
    dim: usize,
    mul: fn(&[Rat], &[Rat]) -> Vec<Rat>,
    norm: fn(&[Rat]) -> Rat,
    basis: Vec<Vec<i64>>,
    labels: &'static [&'static str],
}

fn k_mul(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    vec![&x[0] * &y[0]]
}

fn k_norm(x: &[Rat]) -> Rat {
    &x[0] * &x[0]
}

fn kk_mul(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    vec![&x[0] * &y[0], &x[1] * &y[1]]
}

fn kk_norm(x: &[Rat]) -> Rat {
    &x[0] * &x[1]
}

// (m11, m12, m21, m22)
fn q_mul(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    vec![
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

fn q_norm(x: &[Rat]) -> Rat {
    &x[0] * &x[3] - &x[1] * &x[2]
}

fn cross(u: &[Rat], v: &[Rat]) -> [Rat; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn dot3(u: &[Rat], v: &[Rat]) -> Rat {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

// Zorn matrices (a, u, v, b) ~ [[a, u], [v, b]]:
// (a,u,v,b)(a',u',v',b') = (aa' + u·v', au' + b'u − v×v', a'v + bv' + u×u', bb' + v·u')
fn o_mul(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let (a, u, v, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
    let (a2, u2, v2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
    let vv = cross(v, v2);
    let uu = cross(u, u2);
    let mut out = Vec::with_capacity(8);
    out.push(a * a2 + dot3(u, v2));
    for i in 0..3 {
        out.push(a * &u2[i] + b2 * &u[i] - &vv[i]);
    }
    for i in 0..3 {
        out.push(a2 * &v[i] + b * &v2[i] + &uu[i]);
    }
    out.push(b * b2 + dot3(v, u2));
    out
}

fn o_norm(x: &[Rat]) -> Rat {
    &x[0] * &x[7] - dot3(&x[1..4], &x[4..7])
}

fn model(kind: CompKind) -> Model {
    match kind {
        CompKind::K1 => Model { dim: 1, mul: k_mul, norm: k_norm, basis: vec![vec![1]], labels: &["1"] },
        CompKind::K => Model { dim: 2, mul: kk_mul, norm: kk_norm, basis: vec![vec![1, 1], vec![1, -1]], labels: &["1", "u"] },
        CompKind::Q => Model {
            dim: 4,
            mul: q_mul,
            norm: q_norm,
            basis: vec![vec![1, 0, 0, 1], vec![1, 0, 0, -1], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
            labels: &["1", "h", "e", "f"],
        },
        CompKind::O => {
            let mut basis = vec![vec![1, 0, 0, 0, 0, 0, 0, 1], vec![1, 0, 0, 0, 0, 0, 0, -1]];
            for i in 1..7 {
                let mut b = vec![0; 8];
                b[i] = 1;
                basis.push(b);
            }
            Model { dim: 8, mul: o_mul, norm: o_norm, basis, labels: &["1", "h", "u1", "u2", "u3", "v1", "v2", "v3"] }
        }
    }
}

pub fn build_composition(kind: CompKind) -> CompAlg {
    let m = model(kind);
    let n = m.dim;
    let bm = Mat::from_fn(n, n, |r, c| Rat::int(m.basis[c][r]));
    let binv = inverse(&bm).expect("model basis is invertible");
    let col = |c: usize| bm.col(c);
    let table = (0..n).map(|i| (0..n).map(|j| vector::from_dense(&binv.mul_vec(&(m.mul)(&col(i), &col(j))))).collect()).collect();
    let norm = Mat::from_fn(n, n, |i, j| {
        let s: Vec<Rat> = col(i).iter().zip(col(j)).map(|(a, b)| a + &b).collect();
        (m.norm)(&s) - (m.norm)(&col(i)) - (m.norm)(&col(j))
    });
    let labels = m.labels.iter().map(|s| s.to_string()).collect();
    CompAlg { kind, alg: UnitalAlg::new(labels, table), norm }
}

impl CompAlg {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn norm_polar(&self, x: &SpVec, y: &SpVec) -> Rat {
        let mut s = Rat::zero();
        for (i, a) in x {
            for (j, b) in y {
                let g = self.norm.get(*i, *j);
                if !g.is_zero() {
                    s += a * b * g;
                }
            }
        }
        s
    }

    pub fn norm_of(&self, x: &SpVec) -> Rat {
        self.norm_polar(x, x) * Rat::new(1, 2)
    }

    /// tr(x) = n(x, 1).
    pub fn trace(&self, x: &SpVec) -> Rat {
        self.norm_polar(x, &vector::unit(0))
    }

    /// x̄ = tr(x)1 − x.
    pub fn conj(&self, x: &SpVec) -> SpVec {
        vector::sub(&vector::scale(&vector::unit(0), &self.trace(x)), x)
    }

    /// D_{a,b}(c) = ¼([[a,b],c] + 3(a,c,b)) as an operator on C.
    pub fn inner_derivation_d(&self, a: &SpVec, b: &SpVec) -> Op {
        let ab = self.alg.commutator(a, b);
        let q = Rat::new(1, 4);
        let three = Rat::int(3);
        (0..self.dim())
            .map(|k| {
                let c = vector::unit(k);
                let v = vector::axpy(&self.alg.commutator(&ab, &c), &three, &self.alg.associator(a, &c, b));
                vector::scale(&v, &q)
            })
            .collect()
    }

    /// The trace-zero element spanning the centralizer of a split torus of
    /// Der(C) in C₀, when C ≠ k.
    pub fn extra(&self) -> Option<usize> {
        (self.kind != CompKind::K1).then_some(1)
    }

    /// Basis of C in which the hermitian-matrix construction is weight
    /// adapted: the idempotents ½(1 ± c) followed by the other trace-zero
    /// basis vectors.
    pub fn weight_basis(&self) -> (Vec<SpVec>, Vec<String>) {
        match self.kind {
            CompKind::K1 => (vec![vector::unit(0)], vec![String::new()]),
            _ => {
                let h = Rat::new(1, 2);
                let mut b = vec![vec![(0, h.clone()), (1, h.clone())], vec![(0, h.clone()), (1, -h)]];
                let mut l = vec!["e1".to_string(), "e2".to_string()];
                for k in 2..self.dim() {
                    b.push(vector::unit(k));
                    l.push(self.alg.labels()[k].clone());
                }
                (b, l)
            }
        }
    }

    /// Checks multiplicativity of the norm on basis pairs and the degree-2
    /// equation on basis vectors and their pairwise sums.
    pub fn verify(&self) -> Result<(), String> {
        let n = self.dim();
        let units: Vec<SpVec> = (0..n).map(vector::unit).collect();
        if self.alg.unit_index() != Some(0) {
            return Err("e0 is not the unit".into());
        }
        for i in 0..n {
            for j in 0..n {
                let p = self.alg.basis_product(i, j);
                if self.norm_of(p) != self.norm_of(&units[i]) * self.norm_of(&units[j]) {
                    return Err(format!("n(e{i} e{j}) != n(e{i}) n(e{j})"));
                }
                let x = vector::add(&units[i], &units[j]);
                let x2 = self.alg.mul(&x, &x);
                let lhs = vector::axpy(&vector::axpy(&x2, &-self.trace(&x), &x), &self.norm_of(&x), &vector::unit(0));
                if !lhs.is_empty() {
                    return Err(format!("degree-2 equation fails on e{i} + e{j}"));
                }
            }
        }
        for i in 1..n {
            if !self.trace(&units[i]).is_zero() {
                return Err(format!("e{i} is not trace zero"));
            }
        }
        Ok(())
    }

    /// Checks D_{a,b} = −D_{b,a}, the cyclic identity, and that each D_{a,b}
    /// is a derivation, on basis elements.
    pub fn verify_inner_derivations(&self) -> Result<(), String> {
        let n = self.dim();
        let u = |i| vector::unit(i);
        for a in 0..n {
            for b in 0..n {
                let d = self.inner_derivation_d(&u(a), &u(b));
                if !self.alg.is_derivation(&d) {
                    return Err(format!("D(e{a}, e{b}) is not a derivation"));
                }
                let e = self.inner_derivation_d(&u(b), &u(a));
                if !op::is_zero(&d.iter().zip(&e).map(|(x, y)| vector::add(x, y)).collect::<Vec<_>>()) {
                    return Err(format!("D(e{a}, e{b}) + D(e{b}, e{a}) != 0"));
                }
                for c in 0..n {
                    let (ua, ub, uc) = (u(a), u(b), u(c));
                    let terms = [
                        self.inner_derivation_d(&self.alg.mul(&ua, &ub), &uc),
                        self.inner_derivation_d(&self.alg.mul(&ub, &uc), &ua),
                        self.inner_derivation_d(&self.alg.mul(&uc, &ua), &ub),
                    ];
                    let sum: Vec<SpVec> = (0..n).map(|k| vector::add(&vector::add(&terms[0][k], &terms[1][k]), &terms[2][k])).collect();
                    if !op::is_zero(&sum) {
                        return Err(format!("cyclic identity fails on (e{a}, e{b}, e{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::span::OpSpan;

    #[test]
    fn composition_algebras_verify() {
        for kind in CompKind::ALL {
            let c = build_composition(kind);
            assert_eq!(c.dim(), kind.dim());
            c.verify().unwrap();
            c.verify_inner_derivations().unwrap();
        }
    }

    #[test]
    fn octonions_alternative_not_associative() {
        let o = build_composition(CompKind::O);
        assert!(o.alg.associativity_witness().is_some());
        let u = |i| vector::unit(i);
        for i in 0..8 {
            for j in 0..8 {
                assert!(o.alg.associator(&u(i), &u(i), &u(j)).is_empty());
                assert!(o.alg.associator(&u(j), &u(i), &u(i)).is_empty());
            }
        }
        assert!(build_composition(CompKind::Q).alg.associativity_witness().is_none());
    }

    #[test]
    fn octonion_derivations_are_inner() {
        let o = build_composition(CompKind::O);
        let ops = (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).map(|(i, j)| o.inner_derivation_d(&vector::unit(i), &vector::unit(j)));
        let span = OpSpan::new(ops, 8);
        assert_eq!(span.dim(), 14);
        assert_eq!(o.alg.derivation_algebra().algebra.dim(), 14);
    }

    #[test]
    fn quaternion_d_is_quarter_ad() {
        let q = build_composition(CompKind::Q);
        let u = |i| vector::unit(i);
        for a in 0..4 {
            for b in 0..4 {
                let c = q.alg.commutator(&u(a), &u(b));
                let ad: Op = (0..4).map(|k| vector::scale(&q.alg.commutator(&c, &u(k)), &Rat::new(1, 4))).collect();
                assert_eq!(q.inner_derivation_d(&u(a), &u(b)), ad);
            }
        }
    }
}
