//! The algebra T(X,Y) = D_{X₀,X₀} ⊕ (X₀⊗Y₀) ⊕ d_{Y₀,Y₀} and the LY-algebra
//! on X₀⊗Y₀.

use crate::algebra::anti::pair_index;
use crate::algebra::span::OpSpan;
use crate::algebra::{diagonal_elements, AlgError, AntiAlg, LYAlg, ReductivePair};
use crate::compjordan::TraceAdmissible;
use crate::linalg::op::Op;
use crate::linalg::vector::{self, Accum, SpVec};

/// D_{X₀,X₀} as a Lie algebra of operators on X₀, with the coordinates of
/// each generator D_{e_i,e_j} (i < j).
pub(crate) struct DerSpan {
    pub basis: Vec<Op>,
    pub structure: AntiAlg,
    pub gens: Vec<SpVec>,
    pub diagonal: Vec<SpVec>,
}

impl DerSpan {
    pub fn new(gens: &[Op], n: usize, prefix: &str) -> Result<DerSpan, AlgError> {
        let mut span = OpSpan::new(gens.iter().cloned(), n);
        let module = span.module(prefix).map_err(|(s, t)| AlgError::NotClosed(format!("[{prefix}{s}, {prefix}{t}] leaves the span")))?;
        let coords = gens.iter().map(|g| span.coords(g).expect("generator lies in its span")).collect();
        let diagonal = diagonal_elements(&module);
        Ok(DerSpan { basis: span.basis().to_vec(), structure: module.algebra, gens: coords, diagonal })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the generator with arguments (i, j), any order.
    pub fn pair(&self, n: usize, i: usize, j: usize) -> SpVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.gens[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => vector::neg(&self.gens[pair_index(n, j, i)]),
            std::cmp::Ordering::Equal => Vec::new(),
        }
    }
}

pub struct TitsAlgebra {
    pub algebra: AntiAlg,
    pub x: TraceAdmissible,
    pub y: TraceAdmissible,
    /// dim D_{X₀,X₀}; the tensor block starts here.
    pub dx: usize,
    /// dim d_{Y₀,Y₀}; the last block.
    pub dy: usize,
    /// A split Cartan subalgebra: diagonal elements of both derivation
    /// spans plus c⊗z for the extras of the two ingredients.
    pub cartan: Vec<SpVec>,
}

fn shift(v: &SpVec, by: usize) -> SpVec {
    v.iter().map(|(i, x)| (i + by, x.clone())).collect()
}

/// Assembles T(X,Y) from the bracket rules; the Lie property is not assumed.
pub fn build_tits(x: TraceAdmissible, y: TraceAdmissible) -> Result<TitsAlgebra, AlgError> {
    let (a, b) = (x.dim0(), y.dim0());
    let sx = DerSpan::new(x.generators(), a, "D")?;
    let sy = DerSpan::new(y.generators(), b, "d")?;
    let (dx, dy) = (sx.dim(), sy.dim());
    let off_m = dx;
    let off_d = dx + a * b;
    let n = off_d + dy;
    let idx = |i: usize, j: usize| off_m + i * b + j;
    let mut labels: Vec<String> = (0..dx).map(|s| format!("D{s}")).collect();
    for i in 0..a {
        for j in 0..b {
            labels.push(format!("{}|{}", x.labels0[i], y.labels0[j]));
        }
    }
    labels.extend((0..dy).map(|s| format!("d{s}")));
    let mut g = AntiAlg::zero(n, labels);
    for (s, t, v) in sx.structure.entries() {
        g.set(s, t, v.clone());
    }
    for (s, t, v) in sy.structure.entries() {
        g.set(off_d + s, off_d + t, shift(v, off_d));
    }
    for (s, o) in sx.basis.iter().enumerate() {
        for i in 0..a {
            for j in 0..b {
                let img: SpVec = o[i].iter().map(|(k, c)| (idx(*k, j), c.clone())).collect();
                if !img.is_empty() {
                    g.set(s, idx(i, j), vector::collect(img));
                }
            }
        }
    }
    for (s, o) in sy.basis.iter().enumerate() {
        for i in 0..a {
            for j in 0..b {
                let img: SpVec = o[j].iter().map(|(k, c)| (idx(i, *k), c.clone())).collect();
                if !img.is_empty() {
                    g.set(off_d + s, idx(i, j), vector::collect(img));
                }
            }
        }
    }
    for p in 0..a * b {
        let (i, j) = (p / b, p % b);
        for q in p + 1..a * b {
            let (k, l) = (q / b, q % b);
            let mut acc = Accum::new(n);
            let ty = &y.tprod[j][l];
            if !ty.is_zero() {
                acc.add_scaled(ty, &sx.pair(a, i, k));
            }
            for (u, c) in &x.star[i][k] {
                for (v, e) in &y.star[j][l] {
                    acc.add(idx(*u, *v), &(c * e));
                }
            }
            let tx = &x.tprod[i][k];
            if !tx.is_zero() {
                acc.add_scaled(tx, &shift(&sy.pair(b, j, l), off_d));
            }
            let v = acc.take();
            if !v.is_empty() {
                g.set(idx(i, j), idx(k, l), v);
            }
        }
    }
    let mut cartan: Vec<SpVec> = sx.diagonal.clone();
    cartan.extend(sy.diagonal.iter().map(|v| shift(v, off_d)));
    for c in &x.extras {
        for z in &y.extras {
            let mut v = Vec::new();
            for (i, p) in c {
                for (j, q) in z {
                    v.push((idx(*i, *j), p * q));
                }
            }
            cartan.push(vector::collect(v));
        }
    }
    Ok(TitsAlgebra { algebra: g, x, y, dx, dy, cartan })
}

impl TitsAlgebra {
    pub fn m_dim(&self) -> usize {
        self.x.dim0() * self.y.dim0()
    }

    pub fn tensor_index(&self, i: usize, j: usize) -> usize {
        self.dx + i * self.y.dim0() + j
    }

    /// (D ⊕ d) ⊕ (X₀⊗Y₀).
    pub fn reductive_pair(&self) -> Result<ReductivePair, AlgError> {
        let n = self.algebra.dim();
        let m0 = self.dx;
        let m1 = self.dx + self.m_dim();
        let h = (0..m0).chain(m1..n).map(vector::unit).collect();
        let m = (m0..m1).map(vector::unit).collect();
        ReductivePair::new(self.algebra.clone(), h, m)
    }
}

/// The LY-algebra on X₀⊗Y₀ from its closed formulas:
/// (x₁⊗y₁)·(x₂⊗y₂) = (x₁*x₂)⊗(y₁⋆y₂) and
/// [x₁⊗y₁, x₂⊗y₂, x₃⊗y₃] = D_{x₁,x₂}(x₃)⊗t(y₁y₂)y₃ + t(x₁x₂)x₃⊗d_{y₁,y₂}(y₃).
pub fn ly_inside_tits(t: &TitsAlgebra) -> LYAlg {
    let (x, y) = (&t.x, &t.y);
    let (a, b) = (x.dim0(), y.dim0());
    let labels = t.algebra.labels()[t.dx..t.dx + a * b].to_vec();
    let idx = |i: usize, j: usize| i * b + j;
    let dx: Vec<Vec<Op>> = (0..a).map(|i| (0..a).map(|k| x.d(i, k)).collect()).collect();
    let dy: Vec<Vec<Op>> = (0..b).map(|j| (0..b).map(|l| y.d(j, l)).collect()).collect();
    LYAlg::from_fns(
        a * b,
        labels,
        |p, q| {
            let (i, j, k, l) = (p / b, p % b, q / b, q % b);
            let mut out = Vec::new();
            for (u, c) in &x.star[i][k] {
                for (v, e) in &y.star[j][l] {
                    out.push((idx(*u, *v), c * e));
                }
            }
            vector::collect(out)
        },
        |p, q, r| {
            let (i, j, k, l, u, v) = (p / b, p % b, q / b, q % b, r / b, r % b);
            let mut out = Vec::new();
            let ty = &y.tprod[j][l];
            if !ty.is_zero() {
                out.extend(dx[i][k][u].iter().map(|(w, c)| (idx(*w, v), c * ty)));
            }
            let tx = &x.tprod[i][k];
            if !tx.is_zero() {
                out.extend(dy[j][l][v].iter().map(|(w, c)| (idx(u, *w), c * tx)));
            }
            vector::collect(out)
        },
    )
}

pub(crate) fn restrict_to_trace_zero(o: &Op) -> Op {
    o[1..].iter().map(|c| c.iter().filter(|e| e.0 > 0).map(|(i, x)| (i - 1, x.clone())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_lie, check_ly, classify_simple_type, ly_from_reductive};
    use crate::compjordan::{trace_admissible_view, CompKind, Ingredient};
    use crate::linalg::{BilinForm, Mat};
    use crate::matrix::{check_coincidence, lts_orthosymplectic_sum};
    use crate::tits::{magic_cell, magic_square};

    fn tits(a: &str, b: &str) -> TitsAlgebra {
        let v = |s: &str| trace_admissible_view(&Ingredient::parse(s).unwrap());
        build_tits(v(a), v(b)).unwrap()
    }

    #[test]
    fn small_cells() {
        for (a, b, dim, ty) in [("k", "H3(k)", 3, "A1"), ("K", "H3(k)", 8, "A2"), ("Q", "H3(k)", 21, "C3"), ("O", "H3(k)", 52, "F4")] {
            let t = tits(a, b);
            assert_eq!(t.algebra.dim(), dim);
            assert!(check_lie(&t.algebra).ok, "{a},{b}");
            assert_eq!(classify_simple_type(&t.algebra, &t.cartan).unwrap().to_string(), ty);
        }
    }

    #[test]
    fn magic_square_types() {
        let cells = magic_square(0).unwrap();
        for c in &cells {
            assert!(c.matches(), "{}/{}: {:?}", c.row, c.col, c.computed);
        }
        let dims: Vec<usize> = cells.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![3, 8, 21, 52, 8, 16, 35, 78, 21, 35, 66, 133, 52, 78, 133, 248]);
        let kk = magic_cell(CompKind::K, CompKind::K, 100).unwrap();
        assert_eq!(kk.lie, Some(true));
    }

    #[test]
    fn ly_inside_matches_reductive() {
        for (a, b) in [("O", "H3(k)"), ("Q", "H3(K)"), ("JV(3)", "JV(2)")] {
            let t = tits(a, b);
            let ly = ly_inside_tits(&t);
            assert_eq!(ly, ly_from_reductive(&t.reductive_pair().unwrap()).unwrap(), "{a},{b}");
            assert!(check_ly(&ly).ok());
        }
        assert_eq!(ly_inside_tits(&tits("O", "H3(k)")).dim(), 35);
    }

    #[test]
    fn form_jordan_pair_is_orthogonal_sum() {
        let t = tits("JV(3)", "JV(5)");
        let ly = ly_inside_tits(&t);
        assert!(ly.is_binary_zero());
        let lts = lts_orthosymplectic_sum(&BilinForm::split(3, 1, 1), &BilinForm::split(5, 1, 1)).unwrap().ly;
        assert!(check_coincidence(&ly, &lts, &Mat::identity(15)).unwrap());
    }
}
