//! Small polynomial systems over ℚ: multivariate polynomials and a
//! branching elimination solver for systems with a handful of unknowns.
//!
//! The solver alternates four exact rules: linear rows of the reduced
//! echelon form over monomials (nonlinear monomials ordered first),
//! rational roots of univariate equations, splitting off a common variable
//! factor, and solving for a variable that occurs only linearly. When none
//! applies it may fix one variable to 1 (a scaling normalization supplied
//! by the caller); otherwise the branch is reported as unresolved.

use std::collections::BTreeMap;
use std::fmt;

use super::echelon::Echelon;
use super::poly::rational_roots;
use crate::rat::Rat;

pub type Mono = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Mono, Rat>,
}

fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|e| *e as u32).sum()
}

impl MPoly {
    pub fn zero(n: usize) -> MPoly {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rat) -> MPoly {
        let mut p = MPoly::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn var(n: usize, i: usize) -> MPoly {
        let mut m = vec![0; n];
        m[i] = 1;
        let mut p = MPoly::zero(n);
        p.add_term(m, Rat::one());
        p
    }

    /// Σ c_i x_i.
    pub fn linear(n: usize, coeffs: &[(usize, Rat)]) -> MPoly {
        let mut p = MPoly::zero(n);
        for (i, c) in coeffs {
            let mut m = vec![0; n];
            m[*i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|e| *e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(mono_degree).max().unwrap_or(0)
    }

    /// Variables that occur.
    pub fn vars(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.terms.keys().any(|m| m[i] > 0)).collect()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut p = MPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                p.add_term(m, c1 * c2);
            }
        }
        p
    }

    /// Replaces x_i by `q`.
    pub fn substitute(&self, i: usize, q: &MPoly) -> MPoly {
        if !self.terms.keys().any(|m| m[i] > 0) {
            return self.clone();
        }
        let mut powers: Vec<MPoly> = vec![MPoly::constant(self.n, Rat::one())];
        let mut out = MPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(q);
                powers.push(next);
            }
            let mut rest = m.clone();
            rest[i] = 0;
            let mut base = MPoly::zero(self.n);
            base.add_term(rest, c.clone());
            out = out.add(&base.mul(&powers[e]));
        }
        out
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    t *= &x[i].pow(*e as u32);
                }
            }
            s += t;
        }
        s
    }

    /// Divides by the coefficient of the greatest monomial.
    fn monic(&self) -> MPoly {
        match self.terms.iter().next_back() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Coefficients low degree first, when only x_i occurs.
    fn univariate(&self, i: usize) -> Vec<Rat> {
        let d = self.terms.keys().map(|m| m[i] as usize).max().unwrap_or(0);
        let mut out = vec![Rat::zero(); d + 1];
        for (m, c) in &self.terms {
            out[m[i] as usize] += c;
        }
        out
    }

    /// Divides every monomial by x_i; each must contain it.
    fn divide_var(&self, i: usize) -> MPoly {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m[i] -= 1;
                    (m, c.clone())
                })
                .collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("t{i}") } else { format!("t{i}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// One branch of the solution set: every unknown as a polynomial in the
/// free unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub values: Vec<MPoly>,
    pub free: Vec<usize>,
    /// Unknown fixed to 1 by the scaling normalization, if any.
    pub normalized: Option<usize>,
}

impl Component {
    /// Dimension counting the scaling orbit removed by the normalization.
    pub fn dim(&self) -> usize {
        self.free.len() + usize::from(self.normalized.is_some())
    }

    /// Values with the free unknowns set in order.
    pub fn point(&self, free_values: &[Rat]) -> Vec<Rat> {
        let n = self.values.len();
        let mut x = vec![Rat::zero(); n];
        for (v, c) in self.free.iter().zip(free_values) {
            x[*v] = c.clone();
        }
        self.values.iter().map(|p| p.eval(&x)).collect()
    }

    /// Every free unknown set to 1.
    pub fn unit_point(&self) -> Vec<Rat> {
        self.point(&vec![Rat::one(); self.free.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(MPoly::is_zero)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Unknowns eligible for the normalization x = 1, in priority order.
    pub normalize: Vec<usize>,
    pub max_branches: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SolveReport {
    pub components: Vec<Component>,
    /// Branches where no rule applied.
    pub unresolved: Vec<Vec<MPoly>>,
    /// Branches ending in a univariate equation without rational roots.
    pub irrational: usize,
}

struct State {
    values: Vec<MPoly>,
    eqs: Vec<MPoly>,
    normalized: Option<usize>,
    fixed: Vec<bool>,
}

impl State {
    fn assign(&self, i: usize, q: &MPoly) -> State {
        let mut fixed = self.fixed.clone();
        fixed[i] = true;
        State {
            values: self.values.iter().map(|p| p.substitute(i, q)).collect(),
            eqs: self.eqs.iter().map(|p| p.substitute(i, q)).collect(),
            normalized: self.normalized,
            fixed,
        }
    }
}

/// Solves `eqs = 0` in `n` unknowns.
pub fn solve_system(eqs: Vec<MPoly>, n: usize, opts: &SolveOptions) -> SolveReport {
    let mut report = SolveReport::default();
    let start = State { values: (0..n).map(|i| MPoly::var(n, i)).collect(), eqs, normalized: None, fixed: vec![false; n] };
    let mut stack = vec![start];
    let limit = if opts.max_branches == 0 { 4096 } else { opts.max_branches };
    let mut visited = 0;
    while let Some(s) = stack.pop() {
        visited += 1;
        if visited > limit {
            report.unresolved.push(s.eqs);
            continue;
        }
        step(s, n, opts, &mut stack, &mut report);
    }
    report
}

fn reduce(eqs: Vec<MPoly>, n: usize) -> Result<Vec<MPoly>, ()> {
    let mut monos: Vec<Mono> = eqs.iter().flat_map(|p| p.terms.keys().cloned()).collect();
    monos.sort_by(|a, b| mono_degree(b).cmp(&mono_degree(a)).then(b.cmp(a)));
    monos.dedup();
    let index: BTreeMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut e = Echelon::new(monos.len());
    for p in &eqs {
        let mut row: Vec<(usize, Rat)> = p.terms.iter().map(|(m, c)| (index[m], c.clone())).collect();
        row.sort_by_key(|x| x.0);
        e.insert(&row);
        if e.rank() == monos.len() {
            break;
        }
    }
    let mut out = Vec::with_capacity(e.rank());
    for r in e.into_rows() {
        let mut p = MPoly::zero(n);
        for (j, c) in r {
            p.add_term(monos[j].clone(), c);
        }
        if p.constant_value().is_some() {
            return Err(());
        }
        out.push(p.monic());
    }
    Ok(out)
}

fn step(s: State, n: usize, opts: &SolveOptions, stack: &mut Vec<State>, report: &mut SolveReport) {
    let eqs: Vec<MPoly> = s.eqs.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Ok(eqs) = reduce(eqs, n) else {
        return;
    };
    let s = State { eqs, ..s };
    if s.eqs.is_empty() {
        let free = (0..n).filter(|i| !s.fixed[*i]).collect();
        report.components.push(Component { values: s.values, free, normalized: s.normalized });
        return;
    }
    // a linear equation: solve for its leading variable
    if let Some(p) = s.eqs.iter().find(|p| p.degree() == 1) {
        let (lead, c) = p.terms.iter().next_back().map(|(m, c)| (m.iter().position(|e| *e == 1).unwrap(), c.clone())).unwrap();
        let q = p.add(&MPoly::var(n, lead).scale(&-c.clone())).scale(&-c.recip());
        stack.push(s.assign(lead, &q));
        return;
    }
    // univariate: branch on rational roots
    if let Some((p, v)) = s.eqs.iter().find_map(|p| {
        let vs = p.vars();
        (vs.len() == 1).then(|| (p, vs[0]))
    }) {
        let mut roots = rational_roots(&p.univariate(v));
        roots.dedup();
        if roots.is_empty() {
            report.irrational += 1;
        }
        for r in roots.into_iter().rev() {
            stack.push(s.assign(v, &MPoly::constant(n, r)));
        }
        return;
    }
    // common variable factor: x = 0 or the cofactor vanishes
    if let Some((k, v)) = s.eqs.iter().enumerate().find_map(|(k, p)| (0..n).find(|&v| p.terms.keys().all(|m| m[v] > 0)).map(|v| (k, v))) {
        let mut other = State { values: s.values.clone(), eqs: s.eqs.clone(), normalized: s.normalized, fixed: s.fixed.clone() };
        other.eqs[k] = s.eqs[k].divide_var(v);
        stack.push(other);
        stack.push(s.assign(v, &MPoly::zero(n)));
        return;
    }
    // a variable occurring only as a bare linear term in some equation
    if let Some((p, v, c)) = s.eqs.iter().find_map(|p| {
        (0..n).find_map(|v| {
            let mut c = None;
            for (m, x) in &p.terms {
                if m[v] > 0 {
                    if m[v] == 1 && mono_degree(m) == 1 && c.is_none() {
                        c = Some(x.clone());
                    } else {
                        return None;
                    }
                }
            }
            c.map(|c| (p, v, c))
        })
    }) {
        let q = p.add(&MPoly::var(n, v).scale(&-c.clone())).scale(&-c.recip());
        stack.push(s.assign(v, &q));
        return;
    }
    if s.normalized.is_none() {
        let occurring: Vec<usize> = (0..n).filter(|v| s.eqs.iter().any(|p| p.terms.keys().any(|m| m[*v] > 0))).collect();
        if let Some(&v) = opts.normalize.iter().find(|v| !s.fixed[**v] && occurring.contains(v)) {
            let mut one = s.assign(v, &MPoly::constant(n, Rat::one()));
            one.normalized = Some(v);
            stack.push(s.assign(v, &MPoly::zero(n)));
            stack.push(one);
            return;
        }
    }
    report.unresolved.push(s.eqs);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    fn c(x: i64) -> MPoly {
        MPoly::constant(3, Rat::int(x))
    }

    #[test]
    fn substitution_expands_powers() {
        // (t0 + 1)^2 at t0 := t1 - 1 is t1^2
        let p = v(0).add(&c(1)).mul(&v(0).add(&c(1)));
        assert_eq!(p.substitute(0, &v(1).add(&c(-1))), v(1).mul(&v(1)));
    }

    #[test]
    fn parametric_family() {
        // t0 = (4/3) t2^2, t1 = 2 t2^2, and t2 (3 t0 - 2 t1) = 0
        let e1 = v(0).add(&v(2).mul(&v(2)).scale(&Rat::new(-4, 3)));
        let e2 = v(1).add(&v(2).mul(&v(2)).scale(&Rat::int(-2)));
        let e3 = v(2).mul(&v(0).scale(&Rat::int(3)).add(&v(1).scale(&Rat::int(-2))));
        let r = solve_system(vec![e1, e2, e3], 3, &SolveOptions::default());
        assert!(r.unresolved.is_empty());
        let best = r.components.iter().max_by_key(|c| c.dim()).unwrap();
        assert_eq!(best.free, vec![2]);
        assert_eq!(best.unit_point(), vec![Rat::new(4, 3), Rat::int(2), Rat::one()]);
    }

    #[test]
    fn roots_and_factors() {
        // t0^2 - t0 = 0, t1 t0 = 0, t2 - 1 = 0
        let r = solve_system(vec![v(0).mul(&v(0)).add(&v(0).scale(&Rat::int(-1))), v(1).mul(&v(0)), v(2).add(&c(-1))], 3, &SolveOptions::default());
        let mut pts: Vec<(Vec<usize>, Vec<Rat>)> = r.components.iter().map(|c| (c.free.clone(), c.unit_point())).collect();
        pts.sort();
        assert_eq!(pts, vec![(vec![], vec![Rat::one(), Rat::zero(), Rat::one()]), (vec![1], vec![Rat::zero(), Rat::one(), Rat::one()])]);
    }

    #[test]
    fn normalization_cuts_a_hyperbola() {
        // t0 t1 = -4
        let r = solve_system(vec![v(0).mul(&v(1)).add(&c(4))], 3, &SolveOptions { normalize: vec![0], max_branches: 0 });
        let c = &r.components[0];
        assert_eq!(c.normalized, Some(0));
        assert_eq!(c.dim(), 2);
        assert_eq!(c.unit_point(), vec![Rat::one(), Rat::int(-4), Rat::one()]);
    }

    #[test]
    fn inconsistent_and_irrational() {
        let r = solve_system(vec![v(0).add(&c(-1)), v(0).add(&c(-2))], 3, &SolveOptions::default());
        assert!(r.components.is_empty());
        let r = solve_system(vec![v(0).mul(&v(0)).add(&c(-2))], 3, &SolveOptions::default());
        assert!(r.components.is_empty());
        assert_eq!(r.irrational, 1);
    }
}
