//! Dense rational matrices and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::vector::{self, SpVec};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

/// Affine solution set of `a x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// `None` when the system is inconsistent.
    pub particular: Option<Mat>,
    pub kernel: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::int(x)).collect()).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_sparse_cols(rows: usize, cols: &[SpVec]) -> Mat {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Rat) {
        self.data[i * self.cols + j] += x;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn sparse_col(&self, j: usize) -> SpVec {
        (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).map(|i| (i, self.get(i, j).clone())).collect()
    }

    pub fn sparse_row(&self, i: usize) -> SpVec {
        vector::from_dense(self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "mul shape");
        let mut m = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        m.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn mul_sparse(&self, v: &SpVec) -> SpVec {
        let mut out = vec![Rat::zero(); self.rows];
        for (j, x) in v {
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        vector::from_dense(&out)
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!(self.shape(), o.shape());
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!(self.shape(), o.shape());
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> SpVec {
        vector::from_dense(&self.data)
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SpVec) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for (k, x) in v {
            m.data[*k] = x.clone();
        }
        m
    }

    pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
        let mut m = Mat::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        m
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Mat) -> Mat {
        Mat::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols)
        })
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Integer row echelon form by fraction-free (Bareiss) elimination.
/// Returns the echelon rows and their pivot columns.
fn bareiss(m: &Mat) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let mut l = BigInt::one();
            for x in row {
                if !x.is_integer() {
                    l = l.lcm(&x.denom());
                }
            }
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        // columns left of c in rows below r are already zero
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &Mat) -> usize {
    bareiss(m).1.len()
}

/// Basis of the right null space, each vector integral, primitive, with
/// positive leading entry; one vector per free column in increasing order.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Rat>> {
    let (ech, piv) = bareiss(m);
    let cols = m.cols();
    let is_piv: Vec<bool> = (0..cols).map(|c| piv.contains(&c)).collect();
    let mut out = Vec::new();
    for f in (0..cols).filter(|&c| !is_piv[c]) {
        let mut x = vec![Rat::zero(); cols];
        x[f] = Rat::one();
        for (r, &p) in piv.iter().enumerate().rev() {
            let mut s = Rat::zero();
            for c in p + 1..cols {
                if !ech[r][c].is_zero() && !x[c].is_zero() {
                    s += Rat::from(ech[r][c].clone()) * &x[c];
                }
            }
            x[p] = -(s / Rat::from(ech[r][p].clone()));
        }
        vector::normalize_primitive(&mut x);
        out.push(x);
    }
    out
}

/// Solve `a x = b` column by column.
pub fn solve(a: &Mat, b: &Mat) -> Result<Solution, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::Shape(format!("a is {}x{}, b is {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let kernel = kernel_basis(a);
    let mut part = Mat::zeros(a.cols(), b.cols());
    for k in 0..b.cols() {
        let aug = Mat::from_fn(a.rows(), a.cols() + 1, |i, j| if j < a.cols() { a.get(i, j).clone() } else { b.get(i, k).clone() });
        let (ech, piv) = bareiss(&aug);
        if piv.last() == Some(&a.cols()) {
            return Ok(Solution { particular: None, kernel });
        }
        let n = a.cols();
        let mut x = vec![Rat::zero(); n];
        for (r, &p) in piv.iter().enumerate().rev() {
            let mut s = Rat::from(ech[r][n].clone());
            for c in p + 1..n {
                if !ech[r][c].is_zero() && !x[c].is_zero() {
                    s -= Rat::from(ech[r][c].clone()) * &x[c];
                }
            }
            x[p] = s / Rat::from(ech[r][p].clone());
        }
        for (i, v) in x.into_iter().enumerate() {
            part.set(i, k, v);
        }
    }
    Ok(Solution { particular: Some(part), kernel })
}

pub fn inverse(a: &Mat) -> Result<Mat, LinalgError> {
    if a.rows() != a.cols() {
        return Err(LinalgError::Shape(format!("{}x{} is not square", a.rows, a.cols)));
    }
    let s = solve(a, &Mat::identity(a.rows()))?;
    match s.particular {
        Some(p) if s.kernel.is_empty() => Ok(p),
        _ => Err(LinalgError::Singular),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_small() {
        assert_eq!(rank(&Mat::zeros(3, 3)), 0);
        assert_eq!(rank(&Mat::identity(4)), 4);
        assert!(kernel_basis(&Mat::identity(2)).is_empty());
        let k = kernel_basis(&Mat::from_ints(&[&[1, 1], &[2, 2]]));
        assert_eq!(k, vec![vec![Rat::int(1), Rat::int(-1)]]);
    }

    #[test]
    fn solve_cases() {
        let b = Mat::from_ints(&[&[3], &[-2]]);
        let s = solve(&Mat::identity(2), &b).unwrap();
        assert_eq!(s.particular, Some(b));
        assert!(s.kernel.is_empty());
        let s = solve(&Mat::zeros(1, 1), &Mat::from_ints(&[&[1]])).unwrap();
        assert_eq!(s.particular, None);
        assert!(solve(&Mat::identity(2), &Mat::zeros(3, 1)).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Mat::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(3));
        assert!(inverse(&Mat::from_ints(&[&[1, 2], &[2, 4]])).is_err());
    }
}
