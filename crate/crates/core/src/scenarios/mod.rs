//! Bundled worked examples and the end-to-end pipeline.
//!
//! The data files under `data/` hold the curve configurations, fibre
//! configurations, lattices and the Cayley cubic with its lines; tests and the
//! command line load them from here.

mod cayley;
mod data;
mod pipeline;

pub use cayley::{
    cayley_verify, CayleyOptions, CayleyReport, IncidenceCheck, LineCheck, NodeCheck, Poly4,
    SupportCheck,
};
pub use data::{
    cayley_data, fibre_configs, figure1, figure2, lattices, CayleyData, FibreClass,
    FibreConfigCase, FigureData, LatticeData, LatticeIdentity, LineData, NamedLattice,
};
pub use pipeline::{
    pipeline, reducible_surface, Adversarial, CodeSummary, PipelineError, PipelineOptions,
    PipelineReport, Stage, StageError,
};
