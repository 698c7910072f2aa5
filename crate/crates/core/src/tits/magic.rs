//! Freudenthal's magic square: T(C, H₃(C′)) for C, C′ in {k, K, Q, O}.

use super::construction::{build_tits, TitsAlgebra};
use crate::algebra::{check_lie, classify_type, AlgError, CartanType};
use crate::compjordan::{build_composition, build_jordan, trace_admissible_view, CompKind, Ingredient, JordanKind};

/// Expected types, rows C = k, K, Q, O and columns H₃(k), H₃(K), H₃(Q), H₃(O).
pub const MAGIC_SQUARE: [[&str; 4]; 4] = [
    ["A1", "A2", "C3", "F4"],
    ["A2", "A2+A2", "A5", "E6"],
    ["C3", "A5", "D6", "E7"],
    ["F4", "E6", "E7", "E8"],
];

#[derive(Clone, Debug)]
pub struct MagicCell {
    pub row: CompKind,
    pub col: CompKind,
    pub dim: usize,
    /// None when the Jacobi check was skipped.
    pub lie: Option<bool>,
    pub computed: Result<CartanType, AlgError>,
    pub expected: &'static str,
}

impl MagicCell {
    pub fn matches(&self) -> bool {
        self.lie != Some(false) && self.computed.as_ref().is_ok_and(|t| t.to_string() == self.expected)
    }
}

pub fn magic_tits(row: CompKind, col: CompKind) -> Result<TitsAlgebra, AlgError> {
    let x = trace_admissible_view(&Ingredient::Comp(build_composition(row)));
    let y = trace_admissible_view(&Ingredient::Jordan(build_jordan(&JordanKind::Hermitian(3, col))?));
    build_tits(x, y)
}

/// Builds and classifies one cell; Jacobi is checked when `jacobi_limit`
/// is at least the dimension.
pub fn magic_cell(row: CompKind, col: CompKind, jacobi_limit: usize) -> Result<MagicCell, AlgError> {
    let t = magic_tits(row, col)?;
    let dim = t.algebra.dim();
    let lie = (dim <= jacobi_limit).then(|| check_lie(&t.algebra).ok);
    let computed = classify_type(&t.algebra, &t.cartan);
    let (r, c) = (CompKind::ALL.iter().position(|k| *k == row).unwrap(), CompKind::ALL.iter().position(|k| *k == col).unwrap());
    Ok(MagicCell { row, col, dim, lie, computed, expected: MAGIC_SQUARE[r][c] })
}

pub fn magic_square(jacobi_limit: usize) -> Result<Vec<MagicCell>, AlgError> {
    let mut out = Vec::with_capacity(16);
    for r in CompKind::ALL {
        for c in CompKind::ALL {
            out.push(magic_cell(r, c, jacobi_limit)?);
        }
    }
    Ok(out)
}
