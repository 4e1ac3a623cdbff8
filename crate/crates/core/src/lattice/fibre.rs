use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{DualGraph, LatticeError};
use crate::linalg;

/// Euler number of an elliptic surface with `χ(O) = 1`.
pub const EULER_BUDGET: i64 = 12;

/// The Kodaira types that occur in the fibrations considered here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FibreType {
    I2,
    /// A double fibre whose reduction is of type I2.
    DoubleI2,
    I0Star,
    I2Star,
}

impl FibreType {
    /// Euler number from the Kodaira symbol: `n` for `I_n`, `n + 6` for `I_n*`.
    pub fn euler_number(self) -> i64 {
        match self {
            Self::I2 | Self::DoubleI2 => 2,
            Self::I0Star => 6,
            Self::I2Star => 2 + 6,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::I2 => "I2",
            Self::DoubleI2 => "2I2",
            Self::I0Star => "I0*",
            Self::I2Star => "I2*",
        }
    }
}

impl fmt::Display for FibreType {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.tag())
    }
}

impl FromStr for FibreType {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, LatticeError> {
        match s {
            "I2" => Ok(Self::I2),
            "2I2" | "_2I2" => Ok(Self::DoubleI2),
            "I0*" => Ok(Self::I0Star),
            "I2*" => Ok(Self::I2Star),
            _ => Err(LatticeError::UnknownTag(s.to_string())),
        }
    }
}

impl TryFrom<String> for FibreType {
    type Error = LatticeError;

    fn try_from(s: String) -> Result<Self, LatticeError> {
        s.parse()
    }
}

impl From<FibreType> for String {
    fn from(t: FibreType) -> Self {
        t.tag().to_string()
    }
}

#[derive(Deserialize)]
struct Catalog {
    fibres: Vec<CatalogEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct CatalogEntry {
    #[serde(rename = "type")]
    kind: FibreType,
    graph: DualGraph,
}

/// The bundled fibre graphs with their canonical multiplicities.
pub fn fibre_catalog() -> Vec<(FibreType, DualGraph)> {
    let c: Catalog = serde_json::from_str(include_str!("../../data/fibre_catalog.json"))
        .expect("bundled fibre catalog");
    c.fibres.into_iter().map(|e| (e.kind, e.graph)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZariskiReport {
    pub passed: bool,
    pub signature: (usize, usize, usize),
    pub negative_semidefinite: bool,
    /// `D · C` for each component `C`, where `D = Σ m_i C_i`.
    pub degrees: Vec<i64>,
    /// Primitive positive generator of the radical, when it is a line.
    pub radical_generator: Option<Vec<i64>>,
}

/// Zariski's lemma test: the intersection matrix is negative semidefinite
/// with a one-dimensional radical, and the multiplicity vector lies in it.
pub fn zariski_fibre_check(graph: &DualGraph) -> Result<ZariskiReport, LatticeError> {
    if !graph.is_connected()? {
        return Err(LatticeError::Disconnected);
    }
    let gram = graph.gram()?;
    let signature = gram.signature();
    let negative_semidefinite = signature.0 == 0;
    let mults = graph.multiplicities();
    let degrees = gram.apply(&mults);
    let radical_generator = (signature.2 == 1).then(|| primitive_kernel_vector(&gram.entries));
    let passed = negative_semidefinite
        && signature.2 == 1
        && mults.iter().all(|&m| m > 0)
        && degrees.iter().all(|&d| d == 0);
    Ok(ZariskiReport {
        passed,
        signature,
        negative_semidefinite,
        degrees,
        radical_generator,
    })
}

fn primitive_kernel_vector(m: &[Vec<i64>]) -> Vec<i64> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let q: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let v = linalg::kernel(&q, m.len())
        .into_iter()
        .next()
        .expect("one-dimensional kernel");
    let den = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        -1
    } else {
        1
    };
    ints.iter()
        .map(|x| {
            let y: BigInt = x / &g * sign;
            i64::try_from(y).expect("small kernel entries")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibreTypeReport {
    pub fibre_type: FibreType,
    /// `2V − E` for a configuration of smooth rational curves meeting
    /// transversally.
    pub euler_from_graph: i64,
    pub euler_from_type: i64,
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let degree = |m: &[Vec<i64>]| {
        m.iter()
            .map(|r| r.iter().sum::<i64>())
            .sorted()
            .collect::<Vec<_>>()
    };
    if degree(a) != degree(b) {
        return false;
    }
    (0..n)
        .permutations(n)
        .any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
}

/// Recognizes a fibre graph among the catalogued Kodaira types, using its
/// multiplicities to tell a double I2 fibre from a simple one.
pub fn fibre_type(graph: &DualGraph) -> Result<FibreTypeReport, LatticeError> {
    let z = zariski_fibre_check(graph)?;
    if !z.passed {
        return Err(LatticeError::NotAFibre(format!("degrees {:?}", z.degrees)));
    }
    let generator = z
        .radical_generator
        .expect("passed check has a radical line");
    let mults = graph.multiplicities();
    let k = mults[0] / generator[0];
    let adjacency = graph.adjacency()?;
    let matched = fibre_catalog()
        .into_iter()
        .find(|(kind, g)| {
            let expected = if *kind == FibreType::DoubleI2 { 2 } else { 1 };
            k == expected && isomorphic(&adjacency, &g.adjacency().expect("catalog graph"))
        })
        .ok_or(LatticeError::UnknownType)?;
    let v = graph.vertices.len() as i64;
    Ok(FibreTypeReport {
        fibre_type: matched.0,
        euler_from_graph: 2 * v - graph.edge_count(),
        euler_from_type: matched.0.euler_number(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetReport {
    pub total: i64,
    /// `total ≤ 12`.
    pub within_budget: bool,
    /// `total = 12`.
    pub saturated: bool,
}

/// Sum of Euler numbers of the singular fibres of one pencil.
pub fn euler_budget(config: &[FibreType]) -> BudgetReport {
    let total = config.iter().map(|t| t.euler_number()).sum();
    BudgetReport {
        total,
        within_budget: total <= EULER_BUDGET,
        saturated: total == EULER_BUDGET,
    }
}
