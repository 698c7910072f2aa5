//! Composition and Jordan algebras, and their trace-admissible views used
//! as ingredients of Tits constructions.

pub mod composition;
pub mod jordan;
pub mod unital;
pub mod view;

pub use composition::{build_composition, CompAlg, CompKind};
pub use jordan::{build_jordan, JordanAlg, JordanKind};
pub use unital::UnitalAlg;
pub use view::{trace_admissible_view, Ingredient, TraceAdmissible};
