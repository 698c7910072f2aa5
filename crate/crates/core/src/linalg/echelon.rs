//! Incremental sparse reduced row echelon form over the rationals.
//!
//! Rows stay fully reduced after every insertion, so reducing a vector never
//! cascades: each pivot hit costs one row tail, and tails live on free
//! columns only. Used both for spans (row space, coordinates of members) and
//! for homogeneous systems (null space of the inserted equations).

use super::vector::{self, SpVec};
use crate::rat::Rat;

pub struct Echelon {
    ncols: usize,
    rows: Vec<SpVec>,
    pivot_row: Vec<u32>,
    sorted: bool,
    acc: Vec<Rat>,
    seen: Vec<bool>,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NONE; ncols],
            sorted: true,
            acc: vec![Rat::zero(); ncols],
            seen: vec![false; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows sorted by pivot column; each row starts with its pivot entry 1.
    pub fn rows(&mut self) -> &[SpVec] {
        self.make_rref();
        &self.rows
    }

    pub fn into_rows(mut self) -> Vec<SpVec> {
        self.make_rref();
        self.rows
    }

    pub fn pivots(&mut self) -> Vec<usize> {
        self.make_rref();
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != NONE
    }

    /// Reduce `v` against the stored rows; zero result iff `v` is in the span.
    pub fn reduce(&mut self, v: &SpVec) -> SpVec {
        let mut touched: Vec<usize> = Vec::with_capacity(v.len() * 2);
        let mut hits: Vec<(u32, &Rat)> = Vec::new();
        for (i, x) in v {
            let r = self.pivot_row[*i];
            if r != NONE {
                hits.push((r, x));
            } else {
                self.acc[*i] = x.clone();
                self.seen[*i] = true;
                touched.push(*i);
            }
        }
        for (r, coef) in hits {
            for (j, y) in self.rows[r as usize].iter().skip(1) {
                if !self.seen[*j] {
                    self.seen[*j] = true;
                    touched.push(*j);
                }
                self.acc[*j] -= coef * y;
            }
        }
        touched.sort_unstable();
        let mut out = Vec::with_capacity(touched.len());
        for j in touched {
            self.seen[j] = false;
            let x = std::mem::take(&mut self.acc[j]);
            if !x.is_zero() {
                out.push((j, x));
            }
        }
        out
    }

    /// Insert `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SpVec) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.recip();
        let p = r[0].0;
        let row: SpVec = if lead.is_one() {
            r
        } else {
            r.into_iter().map(|(j, x)| (j, x * &lead)).collect()
        };
        for other in self.rows.iter_mut() {
            if let Ok(pos) = other.binary_search_by_key(&p, |e| e.0) {
                let c = -&other[pos].1;
                *other = vector::axpy(other, &c, &row);
            }
        }
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(row);
        self.sorted = false;
        true
    }

    /// Sort rows by pivot so that row indices are canonical.
    pub fn make_rref(&mut self) {
        if self.sorted {
            return;
        }
        self.rows.sort_by_key(|r| r[0].0);
        for (i, r) in self.rows.iter().enumerate() {
            self.pivot_row[r[0].0] = i as u32;
        }
        self.sorted = true;
    }

    /// Coordinates of `v` in the sorted row basis, or `None` if `v` is not in the span.
    pub fn coords(&mut self, v: &SpVec) -> Option<SpVec> {
        self.make_rref();
        let c = self.pivot_coords(v);
        let mut touched: Vec<usize> = Vec::new();
        for (j, x) in v {
            if !self.seen[*j] {
                self.seen[*j] = true;
                touched.push(*j);
            }
            self.acc[*j] += x;
        }
        for (r, x) in &c {
            for (j, y) in &self.rows[*r] {
                if !self.seen[*j] {
                    self.seen[*j] = true;
                    touched.push(*j);
                }
                self.acc[*j] -= x * y;
            }
        }
        let mut ok = true;
        for j in touched {
            self.seen[j] = false;
            if !std::mem::take(&mut self.acc[j]).is_zero() {
                ok = false;
            }
        }
        ok.then_some(c)
    }

    /// Coordinates read off pivot positions; exact whenever `v` lies in the span.
    pub fn coords_unchecked(&mut self, v: &SpVec) -> SpVec {
        self.make_rref();
        self.pivot_coords(v)
    }

    fn pivot_coords(&self, v: &SpVec) -> SpVec {
        let mut c: SpVec = v
            .iter()
            .filter(|(j, _)| self.pivot_row[*j] != NONE)
            .map(|(j, x)| (self.pivot_row[*j] as usize, x.clone()))
            .collect();
        c.sort_by_key(|e| e.0);
        c
    }

    /// Null space of the rows viewed as equations, one primitive integral
    /// vector per free column in increasing order.
    pub fn null_space(&mut self) -> Vec<SpVec> {
        self.make_rref();
        let mut by_col: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); self.ncols];
        for r in &self.rows {
            let p = r[0].0;
            for (j, x) in r.iter().skip(1) {
                by_col[*j].push((p, -x));
            }
        }
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivot_row[f] != NONE {
                continue;
            }
            let mut v = std::mem::take(&mut by_col[f]);
            v.push((f, Rat::one()));
            v.sort_by_key(|e| e.0);
            vector::normalize_primitive_sparse(&mut v);
            out.push(v);
        }
        out
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rows.len()
    }
}

/// Coordinates with respect to a fixed, linearly independent list of vectors.
pub struct BasisCoords {
    n: usize,
    len: usize,
    ech: Echelon,
}

impl BasisCoords {
    /// Returns `None` if the vectors are dependent.
    pub fn new(basis: &[SpVec], n: usize) -> Option<BasisCoords> {
        let mut ech = Echelon::new(n + basis.len());
        for (i, b) in basis.iter().enumerate() {
            let mut v = b.clone();
            v.push((n + i, Rat::one()));
            ech.insert(&v);
        }
        if ech.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        Some(BasisCoords { n, len: basis.len(), ech })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&mut self, v: &SpVec) -> Option<SpVec> {
        let r = self.ech.reduce(v);
        if r.first().is_some_and(|e| e.0 < self.n) {
            return None;
        }
        Some(r.into_iter().map(|(j, x)| (j - self.n, -x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(d: &[i64]) -> SpVec {
        vector::from_dense(&d.iter().map(|&x| Rat::int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn span_and_coords() {
        let mut e = Echelon::new(4);
        assert!(e.insert(&sv(&[1, 2, 0, 1])));
        assert!(e.insert(&sv(&[0, 1, 1, 0])));
        assert!(!e.insert(&sv(&[1, 3, 1, 1])));
        assert_eq!(e.rank(), 2);
        let c = e.coords(&sv(&[2, 5, 1, 2])).unwrap();
        let mut back = Vec::new();
        for (r, x) in &c {
            back = vector::axpy(&back, x, &e.rows()[*r]);
        }
        assert_eq!(back, sv(&[2, 5, 1, 2]));
        assert!(e.coords(&sv(&[0, 0, 0, 1])).is_none());
    }

    #[test]
    fn rows_are_reduced() {
        let mut e = Echelon::new(3);
        e.insert(&sv(&[0, 1, 1]));
        e.insert(&sv(&[1, 1, 0]));
        assert_eq!(e.rows().to_vec(), vec![sv(&[1, 0, -1]), sv(&[0, 1, 1])]);
    }

    #[test]
    fn null_space_matches_dense() {
        let rows = [[1, 1, 0, 2], [2, 2, 1, 5], [0, 0, 1, 1]];
        let mut e = Echelon::new(4);
        for r in &rows {
            e.insert(&sv(r));
        }
        let ns = e.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(vector::dot(v, &sv(r)).is_zero());
            }
        }
    }

    #[test]
    fn basis_coordinates() {
        let b = vec![sv(&[1, 1, 0]), sv(&[0, 1, 1])];
        let mut bc = BasisCoords::new(&b, 3).unwrap();
        assert_eq!(bc.coords(&sv(&[2, 5, 3])), Some(vec![(0, Rat::int(2)), (1, Rat::int(3))]));
        assert_eq!(bc.coords(&sv(&[1, 0, 0])), None);
        assert!(BasisCoords::new(&[sv(&[1, 2]), sv(&[2, 4])], 2).is_none());
    }
}
