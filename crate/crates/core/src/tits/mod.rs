//! Generalized and classical Tits constructions.

pub mod conditions;
pub mod construction;
pub mod equivariant;
pub mod magic;
pub mod tkk;

pub use conditions::{check_tits_conditions, ConditionResult};
pub use construction::{build_tits, ly_inside_tits, TitsAlgebra};
pub use equivariant::{natural_sl2_problem, orthogonal_pair_problem, solve_equivariant_bracket, tits_bracket_problem, tits_transport, BilinearMap, BracketFamily, BracketProblem, EquivariantSolution};
pub use magic::{magic_cell, magic_square, magic_tits, MagicCell, MAGIC_SQUARE};
pub use tkk::{build_tkk_row, TkkAlgebra};
