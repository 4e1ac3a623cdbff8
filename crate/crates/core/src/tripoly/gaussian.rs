//! Exact evaluation over Q(i) through Gaussian integers.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MultiForm, TriPoint};
use crate::Qi;

type Gauss = Complex<BigInt>;

fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Qi>) -> BigInt {
    values
        .into_iter()
        .flat_map(|z| [z.re.denom(), z.im.denom()])
        .fold(BigInt::one(), |l, d| l.lcm(d))
}

fn scaled(z: &Qi, d: &BigInt) -> Gauss {
    let part = |r: &BigRational| r.numer() * (d / r.denom());
    Gauss::new(part(&z.re), part(&z.im))
}

/// A form over Q(i) stored as `(Gaussian-integer form) / denominator`, so
/// that evaluation needs no rational reductions until the final division.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianForm {
    degrees: [usize; 3],
    coeffs: Vec<Gauss>,
    denominator: BigInt,
}

impl From<&MultiForm<Qi>> for GaussianForm {
    fn from(f: &MultiForm<Qi>) -> Self {
        let denominator = denominator_lcm(&f.coeffs);
        let coeffs = f.coeffs.iter().map(|c| scaled(c, &denominator)).collect();
        Self {
            degrees: f.degrees,
            coeffs,
            denominator,
        }
    }
}

impl GaussianForm {
    pub fn degrees(&self) -> [usize; 3] {
        self.degrees
    }

    /// Partial derivative, as [`MultiForm::diff`].
    pub fn diff(&self, factor: usize, coord: usize) -> Self {
        let d = self.degrees[factor];
        let mut degrees = self.degrees;
        if d == 0 {
            let n = degrees.iter().map(|d| d + 1).product();
            return Self {
                degrees,
                coeffs: vec![Gauss::zero(); n],
                denominator: self.denominator.clone(),
            };
        }
        degrees[factor] = d - 1;
        let n = degrees.iter().map(|d| d + 1).product();
        let mut coeffs = vec![Gauss::zero(); n];
        let [_, ny, nz] = self.degrees.map(|d| d + 1);
        let [_, my, mz] = degrees.map(|d| d + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exp = [i / (ny * nz), i / nz % ny, i % nz];
            let a = exp[factor];
            let (mult, new_a) = match coord {
                0 if a < d => (d - a, a),
                1 if a > 0 => (a, a - 1),
                _ => continue,
            };
            exp[factor] = new_a;
            coeffs[exp[0] * my * mz + exp[1] * mz + exp[2]] += c * BigInt::from(mult);
        }
        Self {
            degrees,
            coeffs,
            denominator: self.denominator.clone(),
        }
    }

    /// The same value as [`MultiForm::eval`].
    pub fn eval(&self, p: &TriPoint<Qi>) -> Qi {
        let mut denominator = self.denominator.clone();
        let tables: Vec<Vec<Gauss>> = (0..3)
            .map(|f| {
                let e = denominator_lcm(&p.factors[f]);
                let u = p.factors[f].clone().map(|c| scaled(&c, &e));
                for _ in 0..self.degrees[f] {
                    denominator *= &e;
                }
                powers(&u, self.degrees[f])
            })
            .collect();
        let [_, ny, nz] = self.degrees.map(|d| d + 1);
        let mut total = Gauss::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, k) = (i / (ny * nz), i / nz % ny, i % nz);
            total += c * &tables[0][a] * &tables[1][b] * &tables[2][k];
        }
        let d = BigRational::from_integer(denominator);
        Qi::new(
            BigRational::from_integer(total.re) / d.clone(),
            BigRational::from_integer(total.im) / d,
        )
    }
}

/// `u0^(d-a) u1^a` for `a = 0..=d`.
fn powers(u: &[Gauss; 2], d: usize) -> Vec<Gauss> {
    let mut p0 = vec![Gauss::one(); d + 1];
    let mut p1 = vec![Gauss::one(); d + 1];
    for k in 1..=d {
        p0[k] = &p0[k - 1] * &u[0];
        p1[k] = &p1[k - 1] * &u[1];
    }
    (0..=d).map(|a| &p0[d - a] * &p1[a]).collect()
}
