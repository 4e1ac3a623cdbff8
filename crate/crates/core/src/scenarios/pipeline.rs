//! construct → certify → quotient nodes → images → code → invariants.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::codes::{
    self, BinaryCode, CodeClass, CodeError, CodeJson, ConsistencyReport, EvenSetRelation,
};
use crate::invariants::{cover_invariants, CoverData, CoverInvariants, InvariantError};
use crate::nodal::{
    certify, collinear_triples, node_images, quotient_node_points, seeded_point,
    surface_through_node, t0_forms, NodalError, NodeCertificate, NodeImages, NodeSurface, P3Point,
    QuotientNodes, RootMode, SearchOptions,
};
use crate::symmetry::orbit;
use crate::tripoly::{TriForm, TriPoint};
use crate::{ExactPoint, Qi, Rational};

/// Inputs built to fail membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Adversarial {
    /// `s(x) · (12 s(y)s(z) − 25 d(y)d(z))`, singular along a curve.
    Reducible,
    /// A seed whose surface passes through an isolated fixed point.
    FixedLocus,
}

impl std::str::FromStr for Adversarial {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "reducible" => Ok(Self::Reducible),
            "fixed-locus" => Ok(Self::FixedLocus),
            _ => Err(format!(
                "unknown adversarial input `{s}` (expected reducible or fixed-locus)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOptions {
    /// Seeds the choice of node and the numerical search.
    pub seed: u64,
    /// Node to use instead of a random one.
    pub point: Option<ExactPoint>,
    pub adversarial: Option<Adversarial>,
    pub search: SearchOptions,
    /// Relative singular-value threshold for collinearity in P³.
    pub collinear_tol: f64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            point: None,
            adversarial: None,
            search: SearchOptions::default(),
            collinear_tol: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Construct,
    Membership,
    QuotientNodes,
    Images,
    Code,
    Invariants,
}

impl fmt::Display for Stage {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            Self::Construct => "construct",
            Self::Membership => "membership",
            Self::QuotientNodes => "quotient-nodes",
            Self::Images => "images",
            Self::Code => "code",
            Self::Invariants => "invariants",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StageError {
    #[error(transparent)]
    Nodal(#[from] NodalError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    Check(String),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("stage {stage} failed: {error}")]
pub struct PipelineError {
    pub stage: Stage,
    pub error: StageError,
    /// The certificate, when the failure happened at or after membership.
    pub certificate: Option<Box<NodeCertificate>>,
}

impl PipelineError {
    fn at(stage: Stage, error: impl Into<StageError>) -> Self {
        Self {
            stage,
            error: error.into(),
            certificate: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeSummary {
    pub code: CodeJson,
    pub dimension: usize,
    pub weight_enumerator: Vec<usize>,
    #[serde(serialize_with = "display")]
    pub class: CodeClass,
    pub unused_indices: Vec<usize>,
    pub consistency: ConsistencyReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub seed: u64,
    pub surface: NodeSurface,
    pub certificate: NodeCertificate,
    pub quotient_nodes: QuotientNodes,
    pub images: NodeImages,
    pub collinear_triples: Vec<[usize; 3]>,
    pub code: CodeSummary,
    pub invariants: CoverInvariants,
}

fn display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Branch data of the double cover for seven nodes.
const COVER: CoverData = CoverData { b_square: 6, k: 7 };

/// The reducible member `s(x) · (12 s(y)s(z) − 25 d(y)d(z))` of `|T0|`,
/// singular along `{s(x) = 0}` times a conic, seeded at `((1:i),(1:2),(1:3))`.
pub fn reducible_surface() -> NodeSurface {
    let q = |n: i64, d: i64| {
        Qi::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            Rational::from_integer(0.into()),
        )
    };
    let coords = vec![q(1, 1), q(-25, 12), q(0, 1), q(0, 1), q(0, 1)];
    let form = TriForm::combination(&coords, &t0_forms());
    let seed: TriPoint<Qi> = "1:i,1:2,1:3".parse().expect("seed point");
    NodeSurface {
        form,
        t0_coords: coords,
        orbit: orbit(&seed),
        seed_point: seed,
    }
}

/// Seed whose surface contains the point `((1:1),(1:1),(1:1))`, fixed by `h`.
const FIXED_LOCUS_SEED: &str = "1:2,1:3,1:6";

/// The complements of the collinear triples, as even sets.
fn relations_from_triples(triples: &[[usize; 3]]) -> Vec<EvenSetRelation> {
    triples
        .iter()
        .map(|t| {
            let support: Vec<usize> = (1..=7).filter(|i| !t.contains(i)).collect();
            EvenSetRelation::new(&support, &format!("complement of {t:?}"))
        })
        .collect()
}

/// Runs the full chain on one surface and returns every intermediate result.
pub fn pipeline(opts: &PipelineOptions) -> Result<PipelineReport, PipelineError> {
    let search = SearchOptions {
        seed: opts.seed,
        ..opts.search
    };
    let surface = match opts.adversarial {
        Some(Adversarial::Reducible) => reducible_surface(),
        Some(Adversarial::FixedLocus) => {
            let p = FIXED_LOCUS_SEED.parse().expect("fixed-locus seed");
            surface_through_node(&p).map_err(|e| PipelineError::at(Stage::Construct, e))?
        }
        None => {
            let p = match &opts.point {
                Some(p) => p.clone(),
                None => seeded_point(opts.seed),
            };
            surface_through_node(&p).map_err(|e| PipelineError::at(Stage::Construct, e))?
        }
    };

    let certificate = certify(&surface, &search);
    if let Err(e) = certificate.verdict() {
        return Err(PipelineError {
            stage: Stage::Membership,
            error: e.into(),
            certificate: Some(Box::new(certificate)),
        });
    }
    let fail = |stage: Stage, error: StageError| PipelineError {
        stage,
        error,
        certificate: Some(Box::new(certificate.clone())),
    };

    let quotient_nodes = quotient_node_points(&surface, RootMode::Numeric)
        .map_err(|e| fail(Stage::QuotientNodes, e.into()))?;
    let images = node_images(&quotient_nodes).map_err(|e| fail(Stage::Images, e.into()))?;

    let triples = collinear_triples(&images.points, opts.collinear_tol);
    let code = codes::span(&relations_from_triples(&triples), 7)
        .map_err(|e| fail(Stage::Code, e.into()))?;
    let consistency =
        codes::collinearity_code_consistency(&images.points, &code, opts.collinear_tol)
            .map_err(|e| fail(Stage::Code, e.into()))?;
    if !consistency.consistent() {
        return Err(fail(
            Stage::Code,
            StageError::Check(format!(
                "predicted triples not collinear: {:?}",
                consistency.missing
            )),
        ));
    }
    let code_summary = CodeSummary {
        code: CodeJson::from(&code),
        dimension: code.dimension(),
        weight_enumerator: code.weight_enumerator(),
        class: code.recognize(),
        unused_indices: code.unused_indices(),
        consistency,
    };

    let invariants = cover_invariants(COVER).map_err(|e| fail(Stage::Invariants, e.into()))?;

    Ok(PipelineReport {
        seed: opts.seed,
        surface,
        certificate,
        quotient_nodes,
        images,
        collinear_triples: triples,
        code: code_summary,
        invariants,
    })
}

impl PipelineReport {
    /// The node images as plain arrays.
    pub fn image_points(&self) -> &[P3Point] {
        &self.images.points
    }

    pub fn code(&self) -> Result<BinaryCode, CodeError> {
        BinaryCode::try_from(&self.code.code)
    }
}
