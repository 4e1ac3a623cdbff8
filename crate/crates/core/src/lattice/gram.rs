use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::LatticeError;
use crate::linalg;

/// A symmetric integer matrix with a label per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GramJson")]
pub struct GramMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct GramJson {
    #[serde(default)]
    labels: Vec<String>,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<GramJson> for GramMatrix {
    type Error = LatticeError;

    fn try_from(j: GramJson) -> Result<Self, LatticeError> {
        let labels = if j.labels.is_empty() {
            (1..=j.entries.len()).map(|i| format!("v{i}")).collect()
        } else {
            j.labels
        };
        GramMatrix::new(labels, j.entries)
    }
}

impl GramMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        if labels.len() != n {
            return Err(LatticeError::LabelCount {
                expected: n,
                got: labels.len(),
            });
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(LatticeError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { labels, entries })
    }

    /// Unlabeled matrix; rows are named `v1, v2, …`.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let labels = (1..=entries.len()).map(|i| format!("v{i}")).collect();
        Self::new(labels, entries)
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let n = values.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { values[i] } else { 0 }).collect())
            .collect();
        Self::from_entries(entries).expect("diagonal matrices are symmetric")
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn rational(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        if self.size() == 0 {
            return BigInt::from(1);
        }
        linalg::determinant(&self.rational()).to_integer()
    }

    /// `|det|`.
    pub fn discriminant(&self) -> BigInt {
        self.determinant().abs()
    }

    pub fn discriminant_u64(&self) -> Option<u64> {
        self.discriminant().to_u64()
    }

    /// `(positive, negative, zero)` counts of the real inertia.
    pub fn signature(&self) -> (usize, usize, usize) {
        linalg::inertia(&self.rational())
    }

    /// Block diagonal sum, with labels of the second block suffixed.
    pub fn direct_sum(&self, other: &Self, suffix: &str) -> Self {
        let (n, m) = (self.size(), other.size());
        let mut entries = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            entries[i][..n].copy_from_slice(&self.entries[i]);
        }
        for i in 0..m {
            entries[n + i][n..].copy_from_slice(&other.entries[i]);
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}{suffix}")));
        Self { labels, entries }
    }

    /// `Pᵀ G P` for an integer matrix `P`.
    pub fn congruent(&self, p: &[Vec<i64>]) -> Self {
        let n = self.size();
        let gp: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.entries[i][k] * p[k][j]).sum())
                    .collect()
            })
            .collect();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| p[k][i] * gp[k][j]).sum())
                    .collect()
            })
            .collect();
        Self {
            labels: self.labels.clone(),
            entries,
        }
    }

    /// `G · v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// A lattice inside the Néron–Severi group of a surface has at most one
/// positive direction; a Gram matrix with two or more cannot occur there.
pub fn index_theorem_violated(g: &GramMatrix) -> bool {
    g.signature().0 >= 2
}
