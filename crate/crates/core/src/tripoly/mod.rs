//! Trihomogeneous forms on P¹ × P¹ × P¹.
//!
//! Coordinates are `x = (x0, x1)`, `y = (y0, y1)`, `z = (z0, z1)`. A monomial
//! is addressed by its exponent triple `(a, b, c)`, where each entry is the
//! degree in the *second* coordinate of its factor:
//!
//! ```text
//! (a, b, c)  <->  x0^(dx-a) x1^a · y0^(dy-b) y1^b · z0^(dz-c) z1^c
//! ```
//!
//! [`TriForm`] is the multidegree (2,2,2) case that carries the surfaces;
//! [`MultiForm`] covers the lower multidegrees produced by differentiation.

mod binary;
mod gaussian;
mod hessian;
mod json;
mod point;

pub use binary::BinaryForm;
pub use gaussian::GaussianForm;
pub use hessian::{affine_hessian, affine_hessian_with, AffineHessian, Chart};
pub use json::{TriFormJson, TriFormJsonCoeff};
pub use point::{ProjPoint, TriPoint};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriPolyError {
    #[error("the zero polynomial has no squarefree decision")]
    ZeroPolynomial,
    #[error("chart coordinate of factor {factor} vanishes at the point")]
    ChartDegenerate { factor: usize },
    #[error("projective point with all coordinates zero in factor {factor}")]
    ZeroPoint { factor: usize },
    #[error("malformed form: {0}")]
    Malformed(String),
}

/// Which of the three P¹ factors.
pub const FACTOR_NAMES: [&str; 3] = ["x", "y", "z"];

/// A form of arbitrary multidegree `(dx, dy, dz)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiForm<S> {
    degrees: [usize; 3],
    coeffs: Vec<S>,
}

impl<S: Scalar> MultiForm<S> {
    pub fn zero(degrees: [usize; 3]) -> Self {
        let n = degrees.iter().map(|d| d + 1).product();
        Self {
            degrees,
            coeffs: vec![S::zero(); n],
        }
    }

    pub fn degrees(&self) -> [usize; 3] {
        self.degrees
    }

    fn index(&self, exp: [usize; 3]) -> usize {
        let [_, dy, dz] = self.degrees;
        (exp[0] * (dy + 1) + exp[1]) * (dz + 1) + exp[2]
    }

    pub fn coeff(&self, exp: [usize; 3]) -> &S {
        &self.coeffs[self.index(exp)]
    }

    pub fn set_coeff(&mut self, exp: [usize; 3], value: S) {
        let i = self.index(exp);
        self.coeffs[i] = value;
    }

    /// Exponent triples in lexicographic order, paired with coefficients.
    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &S)> + '_ {
        let [dx, dy, dz] = self.degrees;
        (0..=dx)
            .flat_map(move |a| (0..=dy).flat_map(move |b| (0..=dz).map(move |c| [a, b, c])))
            .zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self {
            degrees: self.degrees,
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degrees, other.degrees, "multidegree mismatch");
        Self {
            degrees: self.degrees,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn eval(&self, p: &TriPoint<S>) -> S {
        let pw: Vec<Vec<S>> = (0..3)
            .map(|f| monomial_values(&p.factors[f], self.degrees[f]))
            .collect();
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|([a, b, c], k)| {
                k.clone() * pw[0][a].clone() * pw[1][b].clone() * pw[2][c].clone()
            })
            .fold(S::zero(), |acc, t| acc + t)
    }

    /// Partial derivative with respect to coordinate `coord` (0 or 1) of
    /// factor `factor`.
    pub fn diff(&self, factor: usize, coord: usize) -> Self {
        let d = self.degrees[factor];
        let mut degrees = self.degrees;
        if d == 0 {
            return Self::zero(degrees);
        }
        degrees[factor] = d - 1;
        let mut out = Self::zero(degrees);
        for (exp, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let a = exp[factor];
            let (mult, new_a) = match coord {
                0 if a < d => (d - a, a),
                1 if a > 0 => (a, a - 1),
                _ => continue,
            };
            let mut e = exp;
            e[factor] = new_a;
            let i = out.index(e);
            out.coeffs[i] = out.coeffs[i].clone() + c.clone() * S::from_i64(mult as i64);
        }
        out
    }

    /// Restriction to the line where factor `free` varies and the other two
    /// factors are pinned to the given points; the entry of `pins` at `free`
    /// is ignored.
    pub fn restrict_to_line(&self, free: usize, pins: &TriPoint<S>) -> BinaryForm<S> {
        let n = self.degrees[free];
        let pw: Vec<Vec<S>> = (0..3)
            .map(|f| monomial_values(&pins.factors[f], self.degrees[f]))
            .collect();
        let mut coeffs = vec![S::zero(); n + 1];
        for (exp, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mut v = c.clone();
            for f in (0..3).filter(|&f| f != free) {
                v = v * pw[f][exp[f]].clone();
            }
            coeffs[exp[free]] = coeffs[exp[free]].clone() + v;
        }
        BinaryForm::new(coeffs)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultiForm<T> {
        MultiForm {
            degrees: self.degrees,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

use num_traits::Zero;

/// Values `u0^(d-a) u1^a` for `a = 0..=d`.
fn monomial_values<S: Scalar>(u: &[S; 2], d: usize) -> Vec<S> {
    let mut p0 = vec![S::one(); d + 1];
    let mut p1 = vec![S::one(); d + 1];
    for k in 1..=d {
        p0[k] = p0[k - 1].clone() * u[0].clone();
        p1[k] = p1[k - 1].clone() * u[1].clone();
    }
    (0..=d).map(|a| p0[d - a].clone() * p1[a].clone()).collect()
}

/// The three eigen-quadrics of the Klein four-group on P¹:
/// `s = u0² + u1²`, `d = u0² − u1²`, `p = u0 u1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quad {
    S,
    D,
    P,
}

impl Quad {
    pub fn coeffs<S: Scalar>(self) -> Quadric<S> {
        let (o, z) = (S::one(), S::zero());
        match self {
            Quad::S => [o.clone(), z, o],
            Quad::D => [o.clone(), z, -o],
            Quad::P => [z.clone(), o, z],
        }
    }

    pub fn letter(self) -> char {
        match self {
            Quad::S => 's',
            Quad::D => 'd',
            Quad::P => 'p',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            's' => Some(Quad::S),
            'd' => Some(Quad::D),
            'p' => Some(Quad::P),
            _ => None,
        }
    }
}

/// A form of multidegree exactly (2,2,2): 27 coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TriForm<S>(MultiForm<S>);

/// Coefficients of a binary quadratic `q0 u0² + q1 u0 u1 + q2 u1²`.
pub type Quadric<S> = [S; 3];

impl<S: Scalar> TriForm<S> {
    pub fn zero() -> Self {
        Self(MultiForm::zero([2, 2, 2]))
    }

    pub fn from_multi(form: MultiForm<S>) -> Result<Self, TriPolyError> {
        if form.degrees != [2, 2, 2] {
            return Err(TriPolyError::Malformed(format!(
                "multidegree {:?}",
                form.degrees
            )));
        }
        Ok(Self(form))
    }

    /// The product `qx(x) · qy(y) · qz(z)` of per-factor quadratics.
    pub fn product(qx: &Quadric<S>, qy: &Quadric<S>, qz: &Quadric<S>) -> Self {
        let mut f = Self::zero();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    f.0.set_coeff([a, b, c], qx[a].clone() * qy[b].clone() * qz[c].clone());
                }
            }
        }
        f
    }

    /// `q1(x) q2(y) q3(z)` for a word such as `"sdd"`.
    pub fn from_word(word: &str) -> Option<Self> {
        let q: Vec<Quad> = word.chars().map(Quad::from_letter).collect::<Option<_>>()?;
        match q.as_slice() {
            [a, b, c] => Some(Self::product(&a.coeffs(), &b.coeffs(), &c.coeffs())),
            _ => None,
        }
    }

    pub fn from_coeffs(coeffs: Vec<S>) -> Result<Self, TriPolyError> {
        if coeffs.len() != 27 {
            return Err(TriPolyError::Malformed(format!(
                "{} coefficients",
                coeffs.len()
            )));
        }
        Ok(Self(MultiForm {
            degrees: [2, 2, 2],
            coeffs,
        }))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.0.coeffs
    }

    pub fn as_multi(&self) -> &MultiForm<S> {
        &self.0
    }

    pub fn coeff(&self, exp: [usize; 3]) -> &S {
        self.0.coeff(exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &S)> + '_ {
        self.0.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, p: &TriPoint<S>) -> S {
        self.0.eval(p)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self(self.0.scale(k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    /// Linear combination `Σ λ_k f_k`.
    pub fn combination(weights: &[S], forms: &[TriForm<S>]) -> Self {
        weights
            .iter()
            .zip(forms)
            .fold(Self::zero(), |acc, (w, f)| acc.add(&f.scale(w)))
    }

    /// The six first partials, ordered `∂x0, ∂x1, ∂y0, ∂y1, ∂z0, ∂z1`.
    pub fn partials(&self) -> [MultiForm<S>; 6] {
        std::array::from_fn(|k| self.0.diff(k / 2, k % 2))
    }

    pub fn restrict_to_line(&self, free: usize, pins: &TriPoint<S>) -> BinaryForm<S> {
        self.0.restrict_to_line(free, pins)
    }

    /// Scales so the first nonzero coefficient in lexicographic exponent
    /// order is 1. The zero form is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.0.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&(S::one() / lead.clone())),
            None => self.clone(),
        }
    }

    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `Some(λ)` when `self = λ · other` with `other` nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        let (i, lead) = other
            .0
            .coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())?;
        let lambda = self.0.coeffs[i].clone() / lead.clone();
        (*self == other.scale(&lambda)).then_some(lambda)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TriForm<T> {
        TriForm(self.0.map_scalars(f))
    }
}

#[cfg(test)]
mod tests;
