//! Intersection lattices of curve configurations.
//!
//! Gram matrices are integral and all certificates (determinants, inertia,
//! radicals) are computed with exact rational elimination.

mod fibre;
mod gram;
mod graph;

pub use fibre::{
    euler_budget, fibre_catalog, fibre_type, zariski_fibre_check, BudgetReport, FibreType,
    FibreTypeReport, ZariskiReport, EULER_BUDGET,
};
pub use gram::{index_theorem_violated, GramMatrix};
pub use graph::{DualGraph, Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a fibre: {0}")]
    NotAFibre(String),
    #[error("graph matches no catalogued fibre type")]
    UnknownType,
    #[error("unknown fibre tag `{0}`")]
    UnknownTag(String),
}
