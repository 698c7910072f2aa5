//! Jordan algebras: hermitian matrices over composition algebras, symmetric
//! maps of a bilinear form, and Jordan algebras of symmetric forms.
//!
//! Bases start with 1 followed by trace-zero weight vectors, so the
//! normalized trace of x is its first coordinate.

use std::fmt;
use std::str::FromStr;

use super::composition::{build_composition, CompAlg, CompKind};
use super::unital::UnitalAlg;
use crate::algebra::AlgError;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::linalg::{inverse, BilinForm, Mat};
use crate::matrix::Sym0Space;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JordanKind {
    /// H_n(C); for C = k the split model sym(V, φ) with φ split symmetric.
    Hermitian(usize, CompKind),
    /// Symmetric maps of an ε-symmetric form.
    Sym(BilinForm),
    /// J(V, φ) for the split symmetric form on k^m.
    Form(usize),
}

impl fmt::Display for JordanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanKind::Hermitian(n, c) => write!(f, "H{n}({c})"),
            JordanKind::Sym(b) => write!(f, "sym({},{})", b.dim(), b.sign),
            JordanKind::Form(m) => write!(f, "JV({m})"),
        }
    }
}

impl FromStr for JordanKind {
    type Err = AlgError;

    /// Parses "Hn(C)" and "JV(m)".
    fn from_str(s: &str) -> Result<JordanKind, AlgError> {
        let s = s.trim();
        let bad = || AlgError::Invalid(format!("unknown Jordan algebra {s:?} (expected Hn(C) or JV(m))"));
        if let Some(rest) = s.strip_prefix("JV(") {
            let m: usize = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            return Ok(JordanKind::Form(m));
        }
        let rest = s.strip_prefix('H').ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let n: usize = rest[..open].parse().map_err(|_| bad())?;
        let c: CompKind = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?.parse()?;
        Ok(JordanKind::Hermitian(n, c))
    }
}

#[derive(Clone, Debug)]
pub struct JordanAlg {
    pub kind: JordanKind,
    pub alg: UnitalAlg,
    pub degree: usize,
    /// Trace-zero elements spanning, with the split torus of Der(J), a
    /// maximal diagonalizable subalgebra of the Tits algebras built on J.
    pub extras: Vec<SpVec>,
    /// For J(V, φ): the form, used by the D-map D(v,w) = φ_{v,w}.
    pub form: Option<BilinForm>,
}

/// Splits diagonal entries λ into μ·1 + Σ ν_k (E_k − E_{k+1}).
fn diag_coords(lambda: &[Rat]) -> SpVec {
    let n = lambda.len();
    let mu: Rat = lambda.iter().sum::<Rat>() / Rat::int(n as i64);
    let mut out = vec![(0, mu.clone())];
    let mut nu = Rat::zero();
    for (k, l) in lambda.iter().enumerate().take(n - 1) {
        nu = l - &mu + nu;
        out.push((k + 1, nu.clone()));
    }
    out.into_iter().filter(|e| !e.1.is_zero()).collect()
}

pub(crate) fn hermitian(n: usize, c: &CompAlg) -> JordanAlg {
    let dc = c.dim();
    let (wb, wl) = c.weight_basis();
    let winv = inverse(&Mat::from_sparse_cols(dc, &wb)).expect("weight basis");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut labels = vec!["1".to_string()];
    for k in 0..n - 1 {
        labels.push(format!("E{}-E{}", k + 1, k + 2));
    }
    for &(i, j) in &pairs {
        for l in &wl {
            labels.push(format!("x{}{}[{l}]", i + 1, j + 1));
        }
    }
    let dim = labels.len();
    let off0 = n;
    // basis element as an n×n matrix of C-vectors
    let as_matrix = |b: usize| -> Vec<SpVec> {
        let mut m = vec![Vec::new(); n * n];
        if b == 0 {
            for i in 0..n {
                m[i * n + i] = vector::unit(0);
            }
        } else if b < off0 {
            m[(b - 1) * n + b - 1] = vector::unit(0);
            m[b * n + b] = vec![(0, Rat::int(-1))];
        } else {
            let (p, l) = ((b - off0) / dc, (b - off0) % dc);
            let (i, j) = pairs[p];
            m[i * n + j] = wb[l].clone();
            m[j * n + i] = c.conj(&wb[l]);
        }
        m
    };
    let mats: Vec<Vec<SpVec>> = (0..dim).map(as_matrix).collect();
    let matmul = |x: &[SpVec], y: &[SpVec]| -> Vec<SpVec> {
        let mut out = vec![Vec::new(); n * n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = Accum::new(dc);
                for j in 0..n {
                    let (a, b) = (&x[i * n + j], &y[j * n + k]);
                    if !a.is_empty() && !b.is_empty() {
                        acc.add_scaled(&Rat::one(), &c.alg.mul(a, b));
                    }
                }
                out[i * n + k] = acc.take();
            }
        }
        out
    };
    let half = Rat::new(1, 2);
    let decompose = |m: &[SpVec]| -> SpVec {
        let lambda: Vec<Rat> = (0..n)
            .map(|i| {
                let e = &m[i * n + i];
                assert!(e.iter().all(|(k, _)| *k == 0), "hermitian diagonal entries are scalars");
                vector::get(e, 0)
            })
            .collect();
        let mut out = diag_coords(&lambda);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let w = winv.mul_sparse(&m[i * n + j]);
            out.extend(w.into_iter().map(|(l, x)| (off0 + p * dc + l, x)));
        }
        out
    };
    let table: Vec<Vec<SpVec>> = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| {
                    let xy = matmul(&mats[a], &mats[b]);
                    let yx = matmul(&mats[b], &mats[a]);
                    let s: Vec<SpVec> = xy.iter().zip(&yx).map(|(p, q)| vector::scale(&vector::add(p, q), &half)).collect();
                    decompose(&s)
                })
                .collect()
        })
        .collect();
    let extras = (1..n).map(vector::unit).collect();
    JordanAlg { kind: JordanKind::Hermitian(n, c.kind), alg: UnitalAlg::new(labels, table), degree: n, extras, form: None }
}

fn sym_maps(f: &BilinForm) -> Result<JordanAlg, AlgError> {
    let mut s = Sym0Space::new(f)?;
    let n = f.dim();
    let d0 = s.dim();
    let mut labels = vec!["1".to_string()];
    labels.extend(s.labels.iter().cloned());
    let id: Op = (0..n).map(vector::unit).collect();
    let mut ops = vec![id];
    ops.extend(s.span.basis().iter().cloned());
    let inv_n = Rat::new(1, n as i64);
    let mut table = vec![vec![Vec::new(); d0 + 1]; d0 + 1];
    for a in 0..=d0 {
        for b in a..=d0 {
            let p = s.bullet(&ops[a], &ops[b]);
            let t = op::trace(&p) * &inv_n;
            let mut rest = p.clone();
            for (k, col) in rest.iter_mut().enumerate() {
                *col = vector::sub(col, &vec![(k, t.clone())]);
            }
            let mut v = if t.is_zero() { Vec::new() } else { vec![(0, t)] };
            v.extend(s.span.coords(&rest).expect("sym0 is closed under the adjusted product").into_iter().map(|(i, x)| (i + 1, x)));
            table[a][b] = v.clone();
            table[b][a] = v;
        }
    }
    let extras = (0..d0).filter(|&i| op::diagonal(&s.span.basis()[i]).is_some()).map(|i| vector::unit(i + 1)).collect();
    let degree = if f.sign == 1 { n } else { n / 2 };
    Ok(JordanAlg { kind: JordanKind::Sym(f.clone()), alg: UnitalAlg::new(labels, table), degree, extras, form: None })
}

fn form_jordan(m: usize) -> JordanAlg {
    let f = BilinForm::split(m, 1, 1);
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=m).map(|i| format!("v{i}")));
    let alg = UnitalAlg::from_fn(labels, |i, j| match (i, j) {
        (0, _) => vector::unit(j),
        (_, 0) => vector::unit(i),
        _ => {
            let x = f.at(i - 1, j - 1);
            if x.is_zero() {
                Vec::new()
            } else {
                vec![(0, x.clone())]
            }
        }
    });
    let extras = if m % 2 == 1 { vec![vector::unit(m / 2 + 1)] } else { Vec::new() };
    JordanAlg { kind: JordanKind::Form(m), alg, degree: 2, extras, form: Some(f) }
}

pub fn build_jordan(kind: &JordanKind) -> Result<JordanAlg, AlgError> {
    match kind {
        JordanKind::Hermitian(n, c) => {
            if *n == 0 {
                return Err(AlgError::Invalid("H0 is not defined".into()));
            }
            if *c == CompKind::O && *n > 3 {
                return Err(AlgError::Invalid(format!("H{n}(O) is not a Jordan algebra")));
            }
            if *c == CompKind::K1 {
                let mut j = sym_maps(&BilinForm::split(*n, 1, 1))?;
                j.kind = kind.clone();
                return Ok(j);
            }
            Ok(hermitian(*n, &build_composition(*c)))
        }
        JordanKind::Sym(f) => sym_maps(f),
        JordanKind::Form(m) => {
            if *m == 0 {
                return Err(AlgError::Invalid("JV(0) is the ground field; use H1(k)".into()));
            }
            Ok(form_jordan(*m))
        }
    }
}

impl JordanAlg {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Generic trace T(x); the normalized trace is the first coordinate.
    pub fn generic_trace(&self, x: &SpVec) -> Rat {
        vector::get(x, 0) * Rat::int(self.degree as i64)
    }

    /// d_{x,y} = [R_x, R_y].
    pub fn inner_derivation_d(&self, x: &SpVec, y: &SpVec) -> Op {
        op::commutator(&self.alg.right_op(x), &self.alg.right_op(y), self.dim())
    }

    /// Commutativity and the linearized Jordan identity
    /// [R_a, R_{bc}] + [R_b, R_{ca}] + [R_c, R_{ab}] = 0 on basis triples.
    pub fn verify(&self) -> Result<(), String> {
        if !self.alg.is_commutative() {
            return Err("not commutative".into());
        }
        if self.alg.unit_index() != Some(0) {
            return Err("e0 is not the unit".into());
        }
        if let Some((a, b, c)) = self.alg.jordan_witness() {
            let l = self.alg.labels();
            return Err(format!("Jordan identity fails on ({}, {}, {})", l[a], l[b], l[c]));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::span::OpSpan;

    fn j(s: &str) -> JordanAlg {
        build_jordan(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn dimensions_and_identity() {
        for (name, dim) in [("H3(k)", 6), ("H3(K)", 9), ("H3(Q)", 15), ("H3(O)", 27), ("H2(O)", 10), ("H4(K)", 16), ("JV(5)", 6)] {
            let a = j(name);
            assert_eq!(a.dim(), dim, "{name}");
            a.verify().unwrap();
        }
        assert!(build_jordan(&"H4(O)".parse().unwrap()).is_err());
    }

    #[test]
    fn jordan_form_product() {
        let a = j("JV(3)");
        // v1 v3 = φ(v1, v3) 1 = 1 for the split form
        assert_eq!(a.alg.mul(&vector::unit(1), &vector::unit(3)), vector::unit(0));
        assert_eq!(a.alg.mul(&vector::unit(2), &vector::unit(2)), vector::unit(0));
        assert_eq!(a.degree, 2);
    }

    #[test]
    fn albert_derivations_span_f4() {
        let a = j("H3(O)");
        let n = a.dim();
        let ops = (0..n).flat_map(|i| (i + 1..n).map(move |k| (i, k))).map(|(i, k)| a.inner_derivation_d(&vector::unit(i), &vector::unit(k)));
        assert_eq!(OpSpan::new(ops, n).dim(), 52);
    }

    #[test]
    fn matrix_jordan_derivations_are_sl3() {
        // H3(K) ≅ Mat3 with x•y; d_{x,y} spans ad(sl3)
        let a = j("H3(K)");
        let n = a.dim();
        let ops = (0..n).flat_map(|i| (i + 1..n).map(move |k| (i, k))).map(|(i, k)| a.inner_derivation_d(&vector::unit(i), &vector::unit(k)));
        assert_eq!(OpSpan::new(ops, n).dim(), 8);
    }
}
