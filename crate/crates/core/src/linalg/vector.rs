//! Sparse vectors as sorted `(index, value)` lists, plus a dense scratch accumulator.

use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sorted by index, no explicit zeros.
pub type SpVec = Vec<(usize, Rat)>;

pub fn unit(i: usize) -> SpVec {
    vec![(i, Rat::one())]
}

pub fn scale(v: &SpVec, c: &Rat) -> SpVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn neg(v: &SpVec) -> SpVec {
    v.iter().map(|(i, x)| (*i, -x)).collect()
}

/// `a + c*b`, merging sorted lists.
pub fn axpy(a: &SpVec, c: &Rat, b: &SpVec) -> SpVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn add(a: &SpVec, b: &SpVec) -> SpVec {
    axpy(a, &Rat::one(), b)
}

pub fn sub(a: &SpVec, b: &SpVec) -> SpVec {
    axpy(a, &Rat::int(-1), b)
}

pub fn dot(a: &SpVec, b: &SpVec) -> Rat {
    let (mut i, mut j) = (0, 0);
    let mut s = Rat::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

pub fn get(v: &SpVec, i: usize) -> Rat {
    match v.binary_search_by_key(&i, |e| e.0) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Rat::zero(),
    }
}

pub fn from_dense(d: &[Rat]) -> SpVec {
    d.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SpVec, n: usize) -> Vec<Rat> {
    let mut d = vec![Rat::zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

/// Sort and merge an unsorted list of terms.
pub fn collect(mut terms: Vec<(usize, Rat)>) -> SpVec {
    terms.sort_by_key(|t| t.0);
    let mut out: SpVec = Vec::with_capacity(terms.len());
    for (i, x) in terms {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Scale to an integral primitive vector with positive leading entry.
pub fn normalize_primitive(v: &mut [Rat]) {
    let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
        return;
    };
    let neg = lead.signum() < 0;
    let mut l = BigInt::one();
    for x in v.iter() {
        if !x.is_zero() {
            l = l.lcm(&x.denom());
        }
    }
    let mut g = BigInt::zero();
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    for n in &ints {
        g = g.gcd(n);
    }
    for (x, n) in v.iter_mut().zip(ints) {
        let mut q = n / &g;
        if neg {
            q = -q;
        }
        *x = Rat::from(q);
    }
}

pub fn normalize_primitive_sparse(v: &mut SpVec) {
    let mut vals: Vec<Rat> = v.iter().map(|e| e.1.clone()).collect();
    normalize_primitive(&mut vals);
    for (e, x) in v.iter_mut().zip(vals) {
        e.1 = x;
    }
}

/// Dense accumulator with a touched-index list, reusable across sums.
pub struct Accum {
    vals: Vec<Rat>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl Accum {
    pub fn new(n: usize) -> Accum {
        Accum { vals: vec![Rat::zero(); n], seen: vec![false; n], touched: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn add(&mut self, i: usize, x: &Rat) {
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += x;
    }

    pub fn add_scaled(&mut self, c: &Rat, v: &SpVec) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (i, x) in v {
                self.add(*i, x);
            }
        } else {
            for (i, x) in v {
                self.add(*i, &(c * x));
            }
        }
    }

    pub fn take(&mut self) -> SpVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let x = std::mem::take(&mut self.vals[i]);
            if !x.is_zero() {
                out.push((i, x));
            }
        }
        self.touched.clear();
        out
    }
}

/// True when every entry is an integer and their gcd is one.
pub fn is_primitive(v: &[Rat]) -> bool {
    let mut g = BigInt::zero();
    for x in v {
        if !x.is_integer() {
            return false;
        }
        g = g.gcd(&x.numer());
    }
    g.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn merge_ops() {
        let a = vec![(0, r(1)), (3, r(2))];
        let b = vec![(1, r(5)), (3, r(-2))];
        assert_eq!(add(&a, &b), vec![(0, r(1)), (1, r(5))]);
        assert_eq!(dot(&a, &b), r(-4));
        assert_eq!(collect(vec![(2, r(1)), (0, r(1)), (2, r(-1))]), vec![(0, r(1))]);
    }

    #[test]
    fn primitive_normalization() {
        let mut v = vec![Rat::zero(), Rat::new(-1, 2), Rat::new(3, 4)];
        normalize_primitive(&mut v);
        assert_eq!(v, vec![r(0), r(2), r(-3)]);
        assert!(is_primitive(&v));
    }
}
