//! Binary linear codes of even sets of nodal curves.
//!
//! Words are bit masks: bit `k` stands for curve `k + 1`. Lengths here are
//! at most 16, so every code is stored with its full list of codewords and
//! all recognition is by enumeration.
//!
//! Naming: the length-7, dimension-3 code whose nonzero words all have
//! weight 4 is the simplex code, the dual of the [7,4] Hamming code. It is
//! often itself called "the Hamming code" in the even-set literature;
//! [`CodeClass::Simplex7`] is that code.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::nodal::{collinear_triples, p3_distance, P3Point};

pub const MAX_LENGTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("code length {0} outside 1..={MAX_LENGTH}")]
    BadLength(usize),
    #[error("index {index} outside 1..={length}")]
    IndexOutOfRange { index: usize, length: usize },
    #[error("malformed word `{0}`")]
    MalformedWord(String),
    #[error("input points are not distinct")]
    DegenerateInput,
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
}

/// A set of curve indices (1-based) whose sum is even, with a note on where
/// the relation comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSetRelation {
    pub support: Vec<usize>,
    #[serde(default)]
    pub label: String,
}

impl EvenSetRelation {
    pub fn new(support: &[usize], label: &str) -> Self {
        Self {
            support: support.to_vec(),
            label: label.to_string(),
        }
    }

    fn word(&self, length: usize) -> Result<u32, CodeError> {
        self.support.iter().try_fold(0u32, |w, &i| {
            if i == 0 || i > length {
                Err(CodeError::IndexOutOfRange { index: i, length })
            } else {
                Ok(w ^ (1 << (i - 1)))
            }
        })
    }
}

/// A GF(2) linear code with its codewords enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    /// Reduced basis: distinct leading bits, each cleared in the others.
    basis: Vec<u32>,
    /// All codewords, sorted.
    words: Vec<u32>,
}

impl BinaryCode {
    pub fn new(length: usize, generators: &[u32]) -> Result<Self, CodeError> {
        if length == 0 || length > MAX_LENGTH {
            return Err(CodeError::BadLength(length));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >> length != 0) {
            let index = 32 - g.leading_zeros() as usize;
            return Err(CodeError::IndexOutOfRange { index, length });
        }
        let basis = reduce(generators);
        let mut words: Vec<u32> = (0u32..1 << basis.len())
            .map(|m| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| m >> k & 1 == 1)
                    .fold(0, |w, (_, b)| w ^ b)
            })
            .collect();
        words.sort_unstable();
        Ok(Self {
            length,
            basis,
            words,
        })
    }

    pub fn zero(length: usize) -> Result<Self, CodeError> {
        Self::new(length, &[])
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn codewords(&self) -> &[u32] {
        &self.words
    }

    pub fn contains(&self, word: u32) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    /// Coefficient of `z^w` at index `w`, for `w = 0..=length`.
    pub fn weight_enumerator(&self) -> Vec<usize> {
        let mut e = vec![0; self.length + 1];
        for w in &self.words {
            e[w.count_ones() as usize] += 1;
        }
        e
    }

    /// True iff every codeword weight is divisible by `m`.
    pub fn weight_divisibility(&self, m: u32) -> bool {
        self.words.iter().all(|w| w.count_ones() % m == 0)
    }

    /// Indices (1-based) that lie in no codeword.
    pub fn unused_indices(&self) -> Vec<usize> {
        let used = self.words.iter().fold(0, |a, w| a | w);
        (1..=self.length)
            .filter(|i| used >> (i - 1) & 1 == 0)
            .collect()
    }

    /// Lexicographically least sorted codeword list over all coordinate
    /// permutations. Two codes of the same length are equivalent iff their
    /// canonical forms agree.
    pub fn canonical_form(&self) -> Vec<u32> {
        (0..self.length)
            .permutations(self.length)
            .map(|perm| {
                let mut w: Vec<u32> = self.words.iter().map(|&x| permute(x, &perm)).collect();
                w.sort_unstable();
                w
            })
            .min()
            .unwrap_or_default()
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        self.length == other.length
            && self.words.len() == other.words.len()
            && self.weight_enumerator() == other.weight_enumerator()
            && self.canonical_form() == other.canonical_form()
    }

    /// The code with coordinates moved by `perm` (index `k` goes to `perm[k]`,
    /// 0-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let gens: Vec<u32> = self.basis.iter().map(|&w| permute(w, perm)).collect();
        Self::new(self.length, &gens).expect("permutation preserves length")
    }

    pub fn recognize(&self) -> CodeClass {
        [
            CodeClass::ExtendedHamming,
            CodeClass::Simplex7,
            CodeClass::WeightFourPlane7,
        ]
        .into_iter()
        .find(|c| c.reference().is_some_and(|r| self.equivalent(&r)))
        .unwrap_or(CodeClass::Other)
    }

    pub fn word_to_string(&self, w: u32) -> String {
        (0..self.length)
            .map(|k| if w >> k & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn support(w: u32) -> Vec<usize> {
        (0..32).filter(|k| w >> k & 1 == 1).map(|k| k + 1).collect()
    }
}

fn permute(w: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|(k, _)| w >> k & 1 == 1)
        .fold(0, |a, (_, &p)| a | 1 << p)
}

/// Gaussian elimination over GF(2) to a reduced basis, sorted decreasingly.
fn reduce(generators: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &g in generators {
        let mut w = g;
        for &b in &basis {
            w = w.min(w ^ b);
        }
        if w != 0 {
            for b in basis.iter_mut() {
                *b = (*b).min(*b ^ w);
            }
            basis.push(w);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// The code spanned by even-set relations on `length` curves.
pub fn span(relations: &[EvenSetRelation], length: usize) -> Result<BinaryCode, CodeError> {
    let words: Vec<u32> = relations
        .iter()
        .map(|r| r.word(length))
        .collect::<Result<_, _>>()?;
    BinaryCode::new(length, &words)
}

/// Parses `"0110011"`: character `k` is curve `k + 1`.
pub fn parse_word(text: &str) -> Result<u32, CodeError> {
    if text.len() > MAX_LENGTH {
        return Err(CodeError::MalformedWord(text.to_string()));
    }
    text.chars()
        .enumerate()
        .try_fold(0u32, |w, (k, c)| match c {
            '0' => Ok(w),
            '1' => Ok(w | 1 << k),
            _ => Err(CodeError::MalformedWord(text.to_string())),
        })
}

/// File form of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub length: usize,
    pub generators: Vec<String>,
}

impl TryFrom<&CodeJson> for BinaryCode {
    type Error = CodeError;

    fn try_from(j: &CodeJson) -> Result<Self, CodeError> {
        let gens: Vec<u32> = j
            .generators
            .iter()
            .map(|g| {
                if g.len() != j.length {
                    return Err(CodeError::MalformedWord(g.clone()));
                }
                parse_word(g)
            })
            .collect::<Result<_, _>>()?;
        BinaryCode::new(j.length, &gens)
    }
}

impl From<&BinaryCode> for CodeJson {
    fn from(c: &BinaryCode) -> Self {
        Self {
            length: c.length,
            generators: c.basis.iter().map(|&w| c.word_to_string(w)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CodeClass {
    /// The [8,4] code with weight enumerator `1 + 14z⁴ + z⁸`.
    ExtendedHamming,
    /// The [7,3] simplex code: seven words of weight 4.
    Simplex7,
    /// A [7,2] code whose three nonzero words have weight 4.
    WeightFourPlane7,
    Other,
}

impl CodeClass {
    pub fn reference(self) -> Option<BinaryCode> {
        let w = |s: &[&str]| {
            s.iter()
                .map(|t| parse_word(t).expect("reference word"))
                .collect::<Vec<_>>()
        };
        let (length, gens) = match self {
            Self::ExtendedHamming => (8, w(&["11110000", "00111100", "00001111", "10101010"])),
            Self::Simplex7 => (7, w(&["1111000", "0011110", "1010101"])),
            Self::WeightFourPlane7 => (7, w(&["1111000", "0011110"])),
            Self::Other => return None,
        };
        Some(BinaryCode::new(length, &gens).expect("reference code"))
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            Self::ExtendedHamming => "extended-hamming-8-4",
            Self::Simplex7 => "simplex-7-3",
            Self::WeightFourPlane7 => "weight-four-7-2",
            Self::Other => "other",
        })
    }
}

/// Dimension `d` with `sub = over · 4^d`, as in the index formula for a
/// sublattice of index `2^d`.
pub fn dimension_from_discriminants(sub: u64, over: u64) -> Option<u32> {
    if over == 0 || !sub.is_multiple_of(over) {
        return None;
    }
    let q = sub / over;
    (q.is_power_of_two() && q.trailing_zeros().is_multiple_of(2)).then(|| q.trailing_zeros() / 2)
}

/// Collinear triples predicted by the weight-4 words of `code` versus those
/// present among the points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub predicted: Vec<[usize; 3]>,
    pub found: Vec<[usize; 3]>,
    /// Predicted triples that are not collinear.
    pub missing: Vec<[usize; 3]>,
    /// Collinear triples no codeword predicts.
    pub unpredicted: Vec<[usize; 3]>,
}

impl ConsistencyReport {
    pub fn consistent(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Distance below which two images count as the same point.
const DISTINCT_TOL: f64 = 1e-9;

/// For seven points of P³ and a length-7 code: each weight-4 word predicts
/// that the complementary three points are collinear.
pub fn collinearity_code_consistency(
    points: &[P3Point],
    code: &BinaryCode,
    tol: f64,
) -> Result<ConsistencyReport, CodeError> {
    if points.len() != 7 || code.length() != 7 {
        return Err(CodeError::WrongPointCount {
            expected: 7,
            got: points.len(),
        });
    }
    if (0..7)
        .tuple_combinations()
        .any(|(a, b)| p3_distance(&points[a], &points[b]) < DISTINCT_TOL)
    {
        return Err(CodeError::DegenerateInput);
    }
    let predicted: Vec<[usize; 3]> = code
        .codewords()
        .iter()
        .filter(|w| w.count_ones() == 4)
        .map(|&w| {
            let c = BinaryCode::support(!w & 0x7f);
            [c[0], c[1], c[2]]
        })
        .sorted()
        .collect();
    let found = collinear_triples(points, tol);
    let missing = predicted
        .iter()
        .filter(|t| !found.contains(t))
        .copied()
        .collect();
    let unpredicted = found
        .iter()
        .filter(|t| !predicted.contains(t))
        .copied()
        .collect();
    Ok(ConsistencyReport {
        predicted,
        found,
        missing,
        unpredicted,
    })
}

/// True iff the seven points (in P² or P³, all of one dimension) realize the
/// Fano plane: exactly seven collinear triples, every pair of points on
/// exactly one of them.
pub fn fano_configuration_test(points: &[Vec<Complex64>], tol: f64) -> bool {
    if points.len() != 7 || points.iter().any(|p| p.len() != points[0].len()) {
        return false;
    }
    let lines: Vec<[usize; 3]> = (0..7)
        .tuple_combinations()
        .filter(|&(a, b, c)| {
            let n = points[0].len();
            let m = DMatrix::from_fn(3, n, |r, k| [&points[a], &points[b], &points[c]][r][k]);
            let s = m.singular_values();
            s.min() < tol * s.max()
        })
        .map(|(a, b, c)| [a, b, c])
        .collect();
    if lines.len() != 7 {
        return false;
    }
    let pairs: BTreeSet<(usize, usize)> = lines
        .iter()
        .flat_map(|l| [(l[0], l[1]), (l[0], l[2]), (l[1], l[2])])
        .collect();
    pairs.len() == 21
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let a = BinaryCode::new(7, &[0b0110011, 0b1101100]).unwrap();
        let b = BinaryCode::new(7, &[0b0110011 ^ 0b1101100, 0b1101100]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn word_strings() {
        assert_eq!(parse_word("1000001").unwrap(), 0b1000001);
        assert_eq!(parse_word("0100000").unwrap(), 0b10);
        assert!(parse_word("012").is_err());
        let c = BinaryCode::new(7, &[0b11]).unwrap();
        assert_eq!(c.word_to_string(0b11), "1100000");
    }

    #[test]
    fn discriminant_dimensions() {
        assert_eq!(dimension_from_discriminants(768, 3), Some(4));
        assert_eq!(dimension_from_discriminants(128, 2), Some(3));
        assert_eq!(dimension_from_discriminants(24, 3), None);
    }
}
