//! Exact-arithmetic engine for Lie–Yamaguti algebras, Tits constructions,
//! symplectic triple systems and their enveloping Lie algebras.

pub mod adjoint;
pub mod algebra;
pub mod catalog;
pub mod compjordan;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod rat;
pub mod symplectic;
pub mod tits;

pub use rat::Rat;
