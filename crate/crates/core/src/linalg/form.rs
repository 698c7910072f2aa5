//! Epsilon-symmetric bilinear forms given by Gram matrices.

use super::mat::{self, LinalgError, Mat};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinForm {
    pub gram: Mat,
    /// +1 symmetric, -1 skew-symmetric.
    pub sign: i8,
}

impl BilinForm {
    pub fn new(gram: Mat, sign: i8) -> Result<BilinForm, LinalgError> {
        if gram.rows() != gram.cols() {
            return Err(LinalgError::Shape("gram matrix is not square".into()));
        }
        if sign != 1 && sign != -1 {
            return Err(LinalgError::Shape(format!("sign must be +1 or -1, got {sign}")));
        }
        let eps = Rat::int(sign as i64);
        if gram.transpose() != gram.scale(&eps) {
            return Err(LinalgError::Shape(format!("gram is not {}-symmetric", if sign == 1 { "" } else { "skew" })));
        }
        Ok(BilinForm { gram, sign })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        self.gram.get(i, j)
    }

    pub fn is_nondegenerate(&self) -> bool {
        mat::rank(&self.gram) == self.dim()
    }

    /// Split form: hyperbolic pairs `(p_i, q_i)` ordered `p_1..p_m, [u], q_1..q_m`,
    /// with `phi(p_i, q_i) = 1` and, for odd symmetric dimension, `phi(u, u) = c`.
    pub fn split(dim: usize, sign: i8, c: i64) -> BilinForm {
        assert!(sign == 1 || dim % 2 == 0, "skew forms need even dimension");
        let m = dim / 2;
        let mut g = Mat::zeros(dim, dim);
        let q0 = dim - m;
        for i in 0..m {
            g.set(i, q0 + i, Rat::one());
            g.set(q0 + i, i, Rat::int(sign as i64));
        }
        if dim % 2 == 1 {
            g.set(m, m, Rat::int(c));
        }
        BilinForm { gram: g, sign }
    }
}

/// Radical `{x : phi(·, x) = 0}` as a kernel basis of the Gram matrix.
pub fn radical_of_form(f: &BilinForm) -> Vec<Vec<Rat>> {
    mat::kernel_basis(&f.gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_plane_is_nondegenerate() {
        let f = BilinForm::new(Mat::from_ints(&[&[0, 1], &[1, 0]]), 1).unwrap();
        assert!(radical_of_form(&f).is_empty());
        assert!(BilinForm::new(Mat::from_ints(&[&[0, 1], &[1, 0]]), -1).is_err());
    }

    #[test]
    fn split_forms() {
        let f = BilinForm::split(5, 1, 1);
        assert!(f.is_nondegenerate());
        assert_eq!(f.at(2, 2), &Rat::one());
        let s = BilinForm::split(4, -1, 0);
        assert_eq!(BilinForm::new(s.gram.clone(), -1).unwrap(), s);
    }
}
