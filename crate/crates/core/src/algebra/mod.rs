//! Structure-constant algebras, the LY axiom system, enveloping algebras,
//! and the Killing, centroid, commutant and root-system machinery.

pub mod anti;
pub mod centroid;
pub mod check;
pub mod classify;
pub mod derivation;
pub mod error;
pub mod examples;
pub mod inner;
pub mod killing;
pub mod ly;
pub mod module;
pub mod reductive;
pub mod span;

pub use anti::{default_labels, AntiAlg};
pub use centroid::{centroid_dim, commutant_basis, commutant_dim, diagonal_elements, invariant_subspace, is_simple, is_simple_unchecked};
pub use check::{check_lie, check_ly, is_lie, AxiomResult, LieReport, LyReport, Violation};
pub use classify::{classify_simple_type, classify_type, root_data, CartanType, SimpleType};
pub use derivation::{derivation_algebra, derivation_algebra_anti, derivation_algebra_ly, derivations, Product};
pub use error::AlgError;
pub use inner::InnerSpan;
pub use killing::{is_semisimple, is_semisimple_unchecked, killing_form, killing_gram, killing_radical};
pub use ly::LYAlg;
pub use module::ModuleAction;
pub use reductive::{enveloping, enveloping_cartan, enveloping_unchecked, ly_from_reductive, orthogonal_complement, same_span, Enveloping, ReductivePair};
pub use span::{span_algebra, OpSpan};

/// Inner derivations of an LY algebra with their tautological action.
pub fn inner_derivations(a: &LYAlg) -> Result<ModuleAction, AlgError> {
    InnerSpan::from_ly(a).module().map_err(|(s, t)| AlgError::NotClosed(format!("[D{s}, D{t}] leaves the inner-derivation span")))
}
