//! Constructive certificates for Enriques surfaces with seven nodes.
//!
//! The surfaces are quotients `Z/G` of G-invariant (2,2,2)-surfaces
//! `Z ⊂ P¹×P¹×P¹` with `G ≅ Z₂³`, where `Z` carries one G-orbit of eight
//! ordinary double points. The crate builds such `Z` exactly over Q(i),
//! certifies the nodes and the general-position conditions, and implements the
//! finite computations around them: character eigenspaces, binary codes of
//! even node sets, Gram-matrix discriminants and signatures, elliptic fibre
//! budgets and double-cover invariants.
//!
//! Forms and points are generic over [`Scalar`]; the aliases below fix the
//! exact (Gaussian rational) and floating instances.

pub mod codes;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod newton;
pub mod nodal;
pub mod scalar;
pub mod scenarios;
pub mod symmetry;
pub mod tripoly;

use num_complex::Complex;
use num_rational::BigRational;

pub use scalar::{OrderedField, Scalar};

/// Exact rationals.
pub type Rational = BigRational;
/// Gaussian rationals Q(i).
pub type Qi = Complex<BigRational>;
pub type C64 = num_complex::Complex64;
pub type C32 = num_complex::Complex32;

pub type ExactForm = tripoly::TriForm<Qi>;
pub type FloatForm = tripoly::TriForm<C64>;
pub type ExactPoint = tripoly::TriPoint<Qi>;
pub type FloatPoint = tripoly::TriPoint<C64>;
