//! Unital algebras with a normalized trace and a D-map, restricted to the
//! trace-zero part: the data consumed by the Tits constructions.

use super::composition::{build_composition, CompAlg, CompKind};
use super::jordan::{build_jordan, JordanAlg, JordanKind};
use super::unital::UnitalAlg;
use crate::algebra::anti::{num_pairs, pair_index};
use crate::algebra::span::OpSpan;
use crate::algebra::AlgError;
use crate::linalg::op::{self, Op};
use crate::linalg::vector::{self, Accum, SpVec};
use crate::matrix::phi_map;
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub enum Ingredient {
    Comp(CompAlg),
    Jordan(JordanAlg),
}

impl Ingredient {
    /// Parses "k|K|Q|O" as a composition algebra, otherwise a Jordan algebra.
    pub fn parse(s: &str) -> Result<Ingredient, AlgError> {
        match s.trim().parse::<CompKind>() {
            Ok(c) => Ok(Ingredient::Comp(build_composition(c))),
            Err(_) => Ok(Ingredient::Jordan(build_jordan(&s.parse::<JordanKind>()?)?)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Ingredient::Comp(c) => c.kind.to_string(),
            Ingredient::Jordan(j) => j.kind.to_string(),
        }
    }
}

pub struct TraceAdmissible {
    pub name: String,
    pub alg: UnitalAlg,
    pub labels0: Vec<String>,
    /// t(e_i e_j) for e_i, e_j in X₀.
    pub tprod: Vec<Vec<Rat>>,
    /// e_i * e_j = e_i e_j − t(e_i e_j)1, in X₀ coordinates.
    pub star: Vec<Vec<SpVec>>,
    /// D_{e_i,e_j}, i < j, as operators on X₀ (pair-indexed).
    dops: Vec<Op>,
    /// D_{e_i,e_j} on all of X, for verification.
    full: Vec<Op>,
    /// Trace-zero elements completing a split torus in the Tits algebras.
    pub extras: Vec<SpVec>,
}

fn restrict(o: &[SpVec]) -> Op {
    o[1..].iter().map(|c| c.iter().filter(|e| e.0 > 0).map(|(i, x)| (i - 1, x.clone())).collect()).collect()
}

fn shift_down(v: &SpVec) -> SpVec {
    v.iter().filter(|e| e.0 > 0).map(|(i, x)| (i - 1, x.clone())).collect()
}

/// Packages X₀, t, x*y and the D-map: t = ½tr and D_{a,b} = ¼([[a,b],·] + 3(a,·,b))
/// for composition algebras; t = T/deg and d_{x,y} = [R_x, R_y] for Jordan
/// algebras, except D(v,w) = φ_{v,w} for J(V, φ).
pub fn trace_admissible_view(x: &Ingredient) -> TraceAdmissible {
    let (name, alg, extras0, dfull): (String, UnitalAlg, Vec<SpVec>, Box<dyn Fn(usize, usize) -> Op>) = match x {
        Ingredient::Comp(c) => {
            let cc = c.clone();
            let extras = c.extra().map(vector::unit).into_iter().collect();
            (c.kind.to_string(), c.alg.clone(), extras, Box::new(move |i, j| cc.inner_derivation_d(&vector::unit(i), &vector::unit(j))))
        }
        Ingredient::Jordan(j) => {
            let jj = j.clone();
            let d: Box<dyn Fn(usize, usize) -> Op> = match &j.form {
                Some(f) => {
                    let f = f.clone();
                    Box::new(move |a, b| {
                        let mut o: Op = vec![Vec::new()];
                        o.extend(phi_map(&f, a - 1, b - 1).into_iter().map(|c| c.into_iter().map(|(i, x)| (i + 1, x)).collect()));
                        o
                    })
                }
                None => Box::new(move |a, b| jj.inner_derivation_d(&vector::unit(a), &vector::unit(b))),
            };
            (j.kind.to_string(), j.alg.clone(), j.extras.clone(), d)
        }
    };
    let n = alg.dim();
    let d0 = n - 1;
    let labels0 = alg.labels()[1..].to_vec();
    let mut tprod = vec![vec![Rat::zero(); d0]; d0];
    let mut star = vec![vec![Vec::new(); d0]; d0];
    for i in 0..d0 {
        for j in 0..d0 {
            let p = alg.basis_product(i + 1, j + 1);
            tprod[i][j] = vector::get(p, 0);
            star[i][j] = shift_down(p);
        }
    }
    let mut dops = Vec::with_capacity(num_pairs(d0));
    let mut full = Vec::with_capacity(num_pairs(d0));
    for i in 0..d0 {
        for j in i + 1..d0 {
            let f = dfull(i + 1, j + 1);
            dops.push(restrict(&f));
            full.push(f);
        }
    }
    let extras = extras0.iter().map(shift_down).collect();
    TraceAdmissible { name, alg, labels0, tprod, star, dops, full, extras }
}

impl TraceAdmissible {
    pub fn dim0(&self) -> usize {
        self.labels0.len()
    }

    /// D_{e_i,e_j} on X₀.
    pub fn d(&self, i: usize, j: usize) -> Op {
        let n = self.dim0();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.dops[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.dops[pair_index(n, j, i)].iter().map(vector::neg).collect(),
            std::cmp::Ordering::Equal => vec![Vec::new(); n],
        }
    }

    /// D_{x,y} for arbitrary x, y in X₀.
    pub fn d_of(&self, x: &SpVec, y: &SpVec) -> Op {
        let n = self.dim0();
        let mut acc = Accum::new(n);
        let mut cols: Op = vec![Vec::new(); n];
        let mut terms: Vec<(Rat, usize, usize)> = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                if i != j {
                    terms.push((a * b, *i, *j));
                }
            }
        }
        for (k, col) in cols.iter_mut().enumerate() {
            for (c, i, j) in &terms {
                let (lo, hi, s) = if i < j { (*i, *j, c.clone()) } else { (*j, *i, -c) };
                acc.add_scaled(&s, &self.dops[pair_index(n, lo, hi)][k]);
            }
            *col = acc.take();
        }
        cols
    }

    /// Generators D_{e_i,e_j}, i < j.
    pub fn generators(&self) -> &[Op] {
        &self.dops
    }

    /// t(xy) for x, y in X₀.
    pub fn t_of(&self, x: &SpVec, y: &SpVec) -> Rat {
        let mut s = Rat::zero();
        for (i, a) in x {
            for (j, b) in y {
                let t = &self.tprod[*i][*j];
                if !t.is_zero() {
                    s += a * b * t;
                }
            }
        }
        s
    }

    /// x * y in X₀.
    pub fn star_of(&self, x: &SpVec, y: &SpVec) -> SpVec {
        let mut acc = Accum::new(self.dim0());
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(&(a * b), &self.star[*i][*j]);
            }
        }
        acc.take()
    }

    /// Each D_{x,y} is a derivation of X leaving X₀ invariant, and
    /// [E, D_{x,y}] = D_{E(x),y} + D_{x,E(y)} for E in a basis of the D-span.
    pub fn verify(&self) -> Result<(), String> {
        let n = self.dim0();
        for (p, f) in self.full.iter().enumerate() {
            if !f[0].is_empty() || f[1..].iter().any(|c| c.iter().any(|e| e.0 == 0)) {
                return Err(format!("D-generator {p} does not preserve X0"));
            }
            if !self.alg.is_derivation(f) {
                return Err(format!("D-generator {p} is not a derivation"));
            }
        }
        let span = OpSpan::new(self.dops.iter().cloned(), n);
        for (s, e) in span.basis().iter().enumerate() {
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = op::commutator(e, &self.dops[pair_index(n, i, j)], n);
                    let a = self.d_of(&e[i], &vector::unit(j));
                    let b = self.d_of(&vector::unit(i), &e[j]);
                    let rhs: Op = a.iter().zip(&b).map(|(x, y)| vector::add(x, y)).collect();
                    if lhs != rhs {
                        return Err(format!("equivariance fails for E{s} on ({}, {})", self.labels0[i], self.labels0[j]));
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

    #[test]
    fn octonion_star_is_half_commutator() {
        let v = trace_admissible_view(&Ingredient::parse("O").unwrap());
        let Ingredient::Comp(o) = Ingredient::parse("O").unwrap() else { unreachable!() };
        for i in 0..7 {
            for j in 0..7 {
                let c = o.alg.commutator(&vector::unit(i + 1), &vector::unit(j + 1));
                assert_eq!(v.star[i][j], vector::scale(&shift_down(&c), &Rat::new(1, 2)));
                assert!(vector::get(&c, 0).is_zero());
            }
        }
        v.verify().unwrap();
    }

    #[test]
    fn views_verify() {
        for s in ["k", "K", "Q", "H3(k)", "H3(K)", "H3(Q)", "JV(4)", "JV(5)"] {
            let v = trace_admissible_view(&Ingredient::parse(s).unwrap());
            v.verify().unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn form_d_span_is_orthogonal() {
        let v = trace_admissible_view(&Ingredient::parse("JV(5)").unwrap());
        assert_eq!(OpSpan::new(v.generators().iter().cloned(), 5).dim(), 10);
    }

    #[test]
    fn normalized_trace_of_one() {
        let Ingredient::Jordan(j) = Ingredient::parse("H3(k)").unwrap() else { unreachable!() };
        assert_eq!(j.generic_trace(&vector::unit(0)), Rat::int(3));
    }
}
