use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("Jacobi identity fails on basis triple {0:?}")]
    NotLie(Vec<usize>),
    #[error("axiom {axiom} fails on basis tuple {tuple:?}")]
    NotLy { axiom: &'static str, tuple: Vec<usize> },
    #[error("not closed: {0}")]
    NotClosed(String),
    #[error("Killing form is degenerate on the subalgebra; the complement is not direct")]
    Degenerate,
    #[error("classification failed: {0}")]
    Classify(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
