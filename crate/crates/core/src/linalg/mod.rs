//! Exact linear algebra over the rationals.

pub mod echelon;
pub mod form;
pub mod mat;
pub mod op;
pub mod poly;
pub mod polysys;
pub mod vector;

pub use echelon::{BasisCoords, Echelon};
pub use form::{radical_of_form, BilinForm};
pub use mat::{inverse, kernel_basis, rank, solve, LinalgError, Mat, Solution};
pub use vector::SpVec;
