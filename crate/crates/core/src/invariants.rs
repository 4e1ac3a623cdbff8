//! Numerical invariants of double covers of nodal Enriques surfaces.
//!
//! The cover `X̃ → Y` of the resolved Enriques surface is branched on a
//! divisor `B̃` together with `k` nodal curves, with `2L ≡ B̃ + N₁ + … + N_k`.
//! Since the `N_i` are disjoint (−2)-curves orthogonal to `B̃`,
//! `4L² = B̃² − 2k`. With `χ(O_Y) = 1`, `q = 0` and `K_Y` numerically
//! trivial, Riemann–Roch gives `χ(L⁻¹) = 1 + L²/2`, hence
//! `χ = χ(O_Y) + χ(L⁻¹) = 2 + L²/2` and `p_g = χ(K_Y + L) = χ − 1`.
//! The canonical model has `K² = B²/2`.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("B² = {0} is odd, but the intersection form of an Enriques surface is even")]
    OddBranch(i64),
    #[error("B² − 2k = {0} is not divisible by 4, so L² is not an integer")]
    NotDivisible(i64),
    #[error("L² = {0} is odd, but the intersection form of an Enriques surface is even")]
    OddLSquare(i64),
    #[error("node count must be nonnegative, got {0}")]
    NegativeNodes(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverData {
    pub b_square: i64,
    pub k: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverInvariants {
    pub l_square: i64,
    pub chi: i64,
    pub p_g: i64,
    pub q: i64,
    pub k_square: i64,
}

pub fn cover_invariants(c: CoverData) -> Result<CoverInvariants, InvariantError> {
    if c.k < 0 {
        return Err(InvariantError::NegativeNodes(c.k));
    }
    if c.b_square % 2 != 0 {
        return Err(InvariantError::OddBranch(c.b_square));
    }
    let d_square = c.b_square - 2 * c.k;
    if d_square % 4 != 0 {
        return Err(InvariantError::NotDivisible(d_square));
    }
    let l_square = d_square / 4;
    if l_square % 2 != 0 {
        return Err(InvariantError::OddLSquare(l_square));
    }
    let chi_l_inverse = 1 + l_square / 2;
    let chi = 1 + chi_l_inverse;
    let q = 0;
    Ok(CoverInvariants {
        l_square,
        chi,
        p_g: (chi - 1 + q).max(0),
        q,
        k_square: c.b_square / 2,
    })
}

/// `χ` from Noether's formula `12χ = K² + e`, when `e` is known.
pub fn noether_chi(k_square: i64, euler: i64) -> Option<i64> {
    let s = k_square + euler;
    (s % 12 == 0).then_some(s / 12)
}

/// All `k ≤ k_max` for which `B² − 2k` is divisible by 8, as needed for
/// `L²` to be even.
pub fn divisibility_filter(b_square: i64, k_max: i64) -> Vec<i64> {
    (0..=k_max)
        .filter(|k| (b_square - 2 * k).rem_euclid(8) == 0)
        .collect()
}
