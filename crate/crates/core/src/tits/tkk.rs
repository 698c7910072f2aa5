//! The Tits-Kantor-Koecher algebra (Q₀⊗J) ⊕ Der(J) of a unital Jordan
//! algebra, with bracket [d, a⊗x] = a⊗d(x) and
//! [a⊗x, b⊗y] = [a,b]⊗x•y + 2tr(ab)d_{x,y}.

use super::construction::{DerSpan, TitsAlgebra};
use crate::algebra::span::OpSpan;
use crate::algebra::{AlgError, AntiAlg};
use crate::compjordan::{build_composition, CompAlg, CompKind, JordanAlg};
use crate::linalg::op::Op;
use crate::linalg::vector::{self, Accum, SpVec};
use crate::rat::Rat;

pub struct TkkAlgebra {
    pub algebra: AntiAlg,
    pub jordan: JordanAlg,
    /// dim Der(J); the tensor block Q₀⊗J starts here.
    pub der_dim: usize,
    pub cartan: Vec<SpVec>,
    der: DerSpan,
}

fn quaternions() -> CompAlg {
    build_composition(CompKind::Q)
}

/// Index of a⊗x with a in Q₀ = span(h, e, f) and x in J.
fn tensor(r: usize, n: usize, a: usize, x: usize) -> usize {
    r + a * n + x
}

pub fn build_tkk_row(j: JordanAlg) -> Result<TkkAlgebra, AlgError> {
    let n = j.dim();
    let q = quaternions();
    let gens: Vec<Op> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| j.inner_derivation_d(&vector::unit(a), &vector::unit(b))).collect();
    let der = DerSpan::new(&gens, n, "d")?;
    let r = der.dim();
    let dim = r + 3 * n;
    let qlabels = &q.alg.labels()[1..];
    let mut labels: Vec<String> = (0..r).map(|s| format!("d{s}")).collect();
    for a in qlabels {
        for x in j.alg.labels() {
            labels.push(format!("{a}|{x}"));
        }
    }
    let mut g = AntiAlg::zero(dim, labels);
    for (s, t, v) in der.structure.entries() {
        g.set(s, t, v.clone());
    }
    for (s, o) in der.basis.iter().enumerate() {
        for a in 0..3 {
            for x in 0..n {
                let img: SpVec = o[x].iter().map(|(y, c)| (tensor(r, n, a, *y), c.clone())).collect();
                if !img.is_empty() {
                    g.set(s, tensor(r, n, a, x), img);
                }
            }
        }
    }
    // Q₀ data: [a,b] in Q₀ coordinates and tr(ab)
    let comm: Vec<Vec<SpVec>> = (0..3)
        .map(|a| {
            (0..3)
                .map(|b| {
                    let c = q.alg.commutator(&vector::unit(a + 1), &vector::unit(b + 1));
                    c.iter().filter(|e| e.0 > 0).map(|(i, x)| (i - 1, x.clone())).collect()
                })
                .collect()
        })
        .collect();
    let tr: Vec<Vec<Rat>> = (0..3).map(|a| (0..3).map(|b| q.trace(&q.alg.mul(&vector::unit(a + 1), &vector::unit(b + 1)))).collect()).collect();
    let two = Rat::int(2);
    for p in 0..3 * n {
        let (a, x) = (p / n, p % n);
        for pp in p + 1..3 * n {
            let (b, y) = (pp / n, pp % n);
            let mut acc = Accum::new(dim);
            let xy = j.alg.basis_product(x, y);
            for (c, s) in &comm[a][b] {
                for (z, t) in xy {
                    acc.add(tensor(r, n, *c, *z), &(s * t));
                }
            }
            if !tr[a][b].is_zero() {
                acc.add_scaled(&(&two * &tr[a][b]), &der.pair(n, x, y));
            }
            let v = acc.take();
            if !v.is_empty() {
                g.set(tensor(r, n, a, x), tensor(r, n, b, y), v);
            }
        }
    }
    // torus: diagonal derivations, h⊗1, h⊗z for the extras of J (h is the
    // first basis vector of Q₀)
    let mut cartan = der.diagonal.clone();
    cartan.push(vector::unit(tensor(r, n, 0, 0)));
    for z in &j.extras {
        cartan.push(z.iter().map(|(i, c)| (tensor(r, n, 0, *i), c.clone())).collect());
    }
    Ok(TkkAlgebra { algebra: g, jordan: j, der_dim: r, cartan, der })
}

impl TkkAlgebra {
    /// Images in T(Q, J) of the TKK basis: identity on Der(J), a⊗1 ↦ ad_a,
    /// a⊗x ↦ 2(a⊗x) for x in J₀.
    pub fn map_to_tits(&self, t: &TitsAlgebra) -> Result<Vec<SpVec>, AlgError> {
        let n = self.jordan.dim();
        if t.x.dim0() != 3 || t.y.dim0() != n - 1 {
            return Err(AlgError::Invalid("the Tits algebra is not T(Q, J) for this J".into()));
        }
        let q = quaternions();
        let mut dspan = OpSpan::new(t.x.generators().iter().cloned(), 3);
        let mut yspan = OpSpan::new(t.y.generators().iter().cloned(), n - 1);
        let off_d = t.dx + t.m_dim();
        let mut cols = Vec::with_capacity(self.algebra.dim());
        for o in &self.der.basis {
            let r0 = super::construction::restrict_to_trace_zero(o);
            let c = yspan.coords(&r0).ok_or_else(|| AlgError::Invalid("derivation outside the d-span".into()))?;
            cols.push(c.into_iter().map(|(i, x)| (i + off_d, x)).collect());
        }
        let two = Rat::int(2);
        for a in 0..3 {
            let ad: Op = (1..4)
                .map(|c| {
                    let v = q.alg.commutator(&vector::unit(a + 1), &vector::unit(c));
                    v.into_iter().filter(|e| e.0 > 0).map(|(i, x)| (i - 1, x)).collect()
                })
                .collect();
            cols.push(dspan.coords(&ad).ok_or_else(|| AlgError::Invalid("ad_a outside the D-span".into()))?);
            for x in 1..n {
                cols.push(vec![(t.tensor_index(a, x - 1), two.clone())]);
            }
        }
        Ok(cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_lie, classify_simple_type, classify_type};
    use crate::compjordan::{build_jordan, trace_admissible_view, Ingredient};
    use crate::tits::build_tits;

    fn tkk(s: &str) -> TkkAlgebra {
        build_tkk_row(build_jordan(&s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn tkk_types() {
        for (s, dim, ty) in [("H3(K)", 35, "A5"), ("JV(3)", 15, "A3"), ("JV(4)", 21, "B3"), ("H2(Q)", 28, "D4"), ("H3(k)", 21, "C3")] {
            let t = tkk(s);
            assert_eq!(t.algebra.dim(), dim, "{s}");
            assert!(check_lie(&t.algebra).ok, "{s}");
            let got = classify_type(&t.algebra, &t.cartan).unwrap().to_string();
            assert_eq!(got, ty, "{s}");
        }
    }

    #[test]
    fn symmetric_maps_give_c3() {
        let j = build_jordan(&crate::compjordan::JordanKind::Sym(crate::linalg::BilinForm::split(3, 1, 1))).unwrap();
        let t = build_tkk_row(j).unwrap();
        assert_eq!(classify_simple_type(&t.algebra, &t.cartan).unwrap().to_string(), "C3");
    }

    #[test]
    fn tkk_maps_onto_third_row() {
        for s in ["H3(k)", "H3(K)"] {
            let t = tkk(s);
            let view = trace_admissible_view(&Ingredient::parse(s).unwrap());
            let tits = build_tits(trace_admissible_view(&Ingredient::parse("Q").unwrap()), view).unwrap();
            let cols = t.map_to_tits(&tits).unwrap();
            assert_eq!(t.algebra.homomorphism_violation(&tits.algebra, &cols), None, "{s}");
        }
    }
}
