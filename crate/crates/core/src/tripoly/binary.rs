use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::Zero;

use super::{ProjPoint, TriPolyError};
use crate::scalar::{sqrt_qi, Scalar};

/// A homogeneous form in one projective variable `(t0 : t1)`:
/// `Σ c_a t0^(n-a) t1^a`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> BinaryForm<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a degree");
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Formal degree `n` (the form may vanish identically).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, t: &ProjPoint<S>) -> S {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (a, c)| {
                let mut term = c.clone();
                for _ in 0..n - a {
                    term = term * t[0].clone();
                }
                for _ in 0..a {
                    term = term * t[1].clone();
                }
                acc + term
            })
    }

    /// Partial derivative in `t0` (k = 0) or `t1` (k = 1).
    pub fn partial(&self, k: usize) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::new(vec![S::zero()]);
        }
        let coeffs = (0..n)
            .map(|a| match k {
                0 => self.coeffs[a].clone() * S::from_i64((n - a) as i64),
                _ => self.coeffs[a + 1].clone() * S::from_i64((a + 1) as i64),
            })
            .collect();
        Self::new(coeffs)
    }

    /// Dehomogenization at `t0 = 1`, trimmed, plus the multiplicity of the
    /// root `(0:1)`.
    fn affine_part(&self) -> (Vec<S>, usize) {
        let mut p = self.coeffs.clone();
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        let inf = self.degree() + 1 - p.len();
        (p, inf)
    }

    /// Degree of the homogeneous gcd of the nonzero forms in `forms`, i.e.
    /// the number of common roots counted with multiplicity. `None` when
    /// every form vanishes identically.
    pub fn common_root_degree(forms: &[Self]) -> Option<usize> {
        let mut nonzero = forms.iter().filter(|f| !f.is_zero());
        let first = nonzero.next()?;
        let (mut g, mut inf) = first.affine_part();
        for f in nonzero {
            let (p, i) = f.affine_part();
            g = poly_gcd(g, p);
            inf = inf.min(i);
        }
        Some(g.len() - 1 + inf)
    }

    /// Squarefree iff the two partials share no root (char 0).
    pub fn squarefree(&self) -> Result<bool, TriPolyError> {
        if self.is_zero() {
            return Err(TriPolyError::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Ok(true);
        }
        let d = Self::common_root_degree(&[self.partial(0), self.partial(1)]);
        Ok(d == Some(0))
    }

    /// Roots of a nonzero form of degree ≤ 2, in floating point.
    pub fn approx_roots(&self) -> Vec<ProjPoint<Complex64>> {
        let c: Vec<Complex64> = self.coeffs.iter().map(Scalar::to_c64).collect();
        approx_roots_c64(&c)
    }
}

fn approx_roots_c64(c: &[Complex64]) -> Vec<ProjPoint<Complex64>> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    match c.len() {
        2 => {
            // c0 t0 + c1 t1
            if c[1].norm() > 0.0 {
                vec![[one, -c[0] / c[1]]]
            } else if c[0].norm() > 0.0 {
                vec![[zero, one]]
            } else {
                vec![]
            }
        }
        3 => {
            let (a, b, cc) = (c[0], c[1], c[2]);
            if cc.norm() > 0.0 {
                // cc t² + b t + a = 0 in t = t1/t0
                let disc = (b * b - 4.0 * a * cc).sqrt();
                let (r1, r2) = if (-b + disc).norm() >= (-b - disc).norm() {
                    let r1 = (-b + disc) / (2.0 * cc);
                    (
                        r1,
                        if r1.norm() > 0.0 {
                            a / (cc * r1)
                        } else {
                            (-b - disc) / (2.0 * cc)
                        },
                    )
                } else {
                    let r1 = (-b - disc) / (2.0 * cc);
                    (
                        r1,
                        if r1.norm() > 0.0 {
                            a / (cc * r1)
                        } else {
                            (-b + disc) / (2.0 * cc)
                        },
                    )
                };
                vec![[one, r1], [one, r2]]
            } else {
                let mut roots = vec![[zero, one]];
                roots.extend(approx_roots_c64(&c[..2]));
                roots
            }
        }
        _ => vec![],
    }
}

impl BinaryForm<Complex<BigRational>> {
    /// Exact roots of a nonzero form of degree ≤ 2 when they lie in Q(i).
    pub fn exact_roots(&self) -> Option<Vec<ProjPoint<Complex<BigRational>>>> {
        type Q = Complex<BigRational>;
        let c = &self.coeffs;
        let one = Q::from_i64(1);
        let zero = Q::from_i64(0);
        match (self.degree(), self.is_zero()) {
            (_, true) => None,
            (0, _) => Some(vec![]),
            (1, _) => Some(if c[1].is_zero() {
                vec![[zero, one]]
            } else {
                vec![[one, -c[0].clone() / c[1].clone()]]
            }),
            (2, _) => {
                if c[2].is_zero() {
                    let mut r = vec![[zero, one]];
                    r.extend(BinaryForm::new(c[..2].to_vec()).exact_roots()?);
                    return Some(r);
                }
                let disc =
                    c[1].clone() * c[1].clone() - Q::from_i64(4) * c[0].clone() * c[2].clone();
                let s = sqrt_qi(&disc)?;
                let two_c = Q::from_i64(2) * c[2].clone();
                Some(vec![
                    [one.clone(), (-c[1].clone() + s.clone()) / two_c.clone()],
                    [one, (-c[1].clone() - s) / two_c],
                ])
            }
            _ => None,
        }
    }
}

/// Monic gcd of univariate polynomials (coefficients in ascending order).
fn poly_gcd<S: Scalar>(mut a: Vec<S>, mut b: Vec<S>) -> Vec<S> {
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().cloned().unwrap_or_else(S::one);
    if lead.is_zero() {
        return a;
    }
    a.into_iter().map(|c| c / lead.clone()).collect()
}

fn trim<S: Scalar>(p: &mut Vec<S>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let k = r.len() - 1;
        let f = r[k].clone() / lead.clone();
        for i in 0..=db {
            r[k - db + i] = r[k - db + i].clone() - f.clone() * b[i].clone();
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(S::zero());
        }
    }
    trim(&mut r);
    r
}
