//! Surfaces `Z ∈ |T0|` with one G-orbit of eight nodes.
//!
//! [`surface_through_node`] solves the linear conditions for `Z` to be
//! singular at a seed point `P`; G-invariance then makes `Z` singular along
//! the whole orbit. [`certify`] checks the nodes exactly, checks general
//! position with respect to the fixed loci of `G` exactly, and runs a
//! best-effort numerical search for further singular points. The G₀-fixed
//! points on `Z` give six more nodes of the quotient, which together with the
//! orbit are mapped to P³ by the T1 forms in [`node_images`].

mod certify;
mod construct;
mod quotient;
mod search;

pub use certify::{
    certify, membership_check, verify_node, LineCheck, NodeCertificate, NodeCheck, PointCheck,
};
pub use construct::{
    condition_matrix, sample_seed_point, seeded_point, surface_through_node, t0_forms, NodeSurface,
};
pub use quotient::{
    collinear_triples, node_images, p3_distance, quotient_node_points, FixedPointRecord,
    NodeImages, P3Point, QuotientClass, QuotientNodes, RootMode,
};
pub use search::{
    canonical_representative, numerical_singular_search, FoundPoint, SearchOptions, SearchReport,
};

use crate::symmetry::GroupElement;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NodalError {
    #[error("seed point is fixed by {0}")]
    FixedPoint(GroupElement),
    #[error("singularity conditions leave a kernel of dimension {0}, expected 1")]
    DegenerateKernel(usize),
    #[error("constructed form is not singular at orbit point {0}")]
    NotSingularAtOrbit(usize),
    #[error("point is not a critical point of the form")]
    NotCritical,
    #[error("orbit point {index} is not an ordinary double point (Hessian rank {rank})")]
    DegenerateNode { index: usize, rank: usize },
    #[error("fixed locus violation: {0}")]
    FixedLocusViolation(String),
    #[error("singular point {point} outside the node orbit (residual {residual:.3e})")]
    ExtraSingularityFound { point: String, residual: f64 },
    #[error("roots on fixed line {0} are not Gaussian rational")]
    IrrationalRoot(usize),
    #[error("fixed points on Z do not form six classes of four: {0}")]
    UnexpectedFixedPoints(String),
    #[error("all T1 forms vanish at quotient node {0}")]
    BasePointHit(usize),
    #[error(transparent)]
    TriPoly(#[from] crate::tripoly::TriPolyError),
}
