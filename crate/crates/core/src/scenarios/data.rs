use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::lattice::{DualGraph, FibreType, GramMatrix, LatticeError};

/// A class `Σ m_i C_i` on a figure, with the even set of nodal curves it
/// certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreClass {
    pub name: String,
    pub mult: BTreeMap<String, i64>,
    /// Indices of the nodal curves of odd multiplicity.
    #[serde(default)]
    pub even_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureData {
    pub graph: DualGraph,
    #[serde(default)]
    pub fibre_classes: Vec<FibreClass>,
}

impl FigureData {
    /// The figure graph carrying the multiplicities of `class`.
    pub fn class_graph(&self, class: &FibreClass) -> Result<DualGraph, LatticeError> {
        let mults: Vec<(&str, i64)> = class.mult.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        self.graph.with_multiplicities(&mults)
    }
}

/// One case of fibre types, listed per elliptic pencil.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreConfigCase {
    pub case: u32,
    pub pencils: Vec<Vec<FibreType>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedLattice {
    pub name: String,
    #[serde(flatten)]
    pub gram: GramMatrix,
}

/// An index identity `disc(sub) = disc(lattice) · 4^d`, with either a named
/// sublattice or its discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeIdentity {
    pub name: String,
    pub lattice: String,
    #[serde(default)]
    pub sublattice: Option<String>,
    #[serde(default)]
    pub sublattice_discriminant: Option<u64>,
    pub expected_dimension: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeData {
    pub lattices: Vec<NamedLattice>,
    pub identities: Vec<LatticeIdentity>,
}

impl LatticeData {
    pub fn get(&self, name: &str) -> Option<&GramMatrix> {
        self.lattices
            .iter()
            .find(|l| l.name == name)
            .map(|l| &l.gram)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicTerm {
    pub exp: [u32; 4],
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicData {
    pub terms: Vec<CubicTerm>,
}

/// A line of P³ through two integral points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineData {
    pub name: String,
    pub points: [[i64; 4]; 2],
    /// Lines this one is expected to meet, among the edge lines.
    #[serde(default)]
    pub meets: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyData {
    pub cubic: CubicData,
    pub nodes: Vec<[i64; 4]>,
    pub edges: Vec<LineData>,
    pub plane: [i64; 4],
    pub plane_lines: Vec<LineData>,
}

fn load<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("bundled {what} is malformed: {e}"))
}

pub fn figure1() -> FigureData {
    load(include_str!("../../data/figure1.json"), "figure1.json")
}

pub fn figure2() -> FigureData {
    load(include_str!("../../data/figure2.json"), "figure2.json")
}

pub fn fibre_configs() -> Vec<FibreConfigCase> {
    #[derive(Deserialize)]
    struct File {
        cases: Vec<FibreConfigCase>,
    }
    load::<File>(
        include_str!("../../data/fibre_configs.json"),
        "fibre_configs.json",
    )
    .cases
}

pub fn lattices() -> LatticeData {
    load(include_str!("../../data/lattices.json"), "lattices.json")
}

pub fn cayley_data() -> CayleyData {
    load(include_str!("../../data/cayley.json"), "cayley.json")
}
