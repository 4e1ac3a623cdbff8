use std::fmt;

use num_complex::Complex;
use num_rational::BigRational;

use super::TriPolyError;
use crate::scalar::{format_qi, parse_qi, ParseScalarError, Scalar};

/// A point of P¹ as a coordinate pair, not both zero.
pub type ProjPoint<S> = [S; 2];

/// A point of P¹ × P¹ × P¹.
#[derive(Debug, Clone, PartialEq)]
pub struct TriPoint<S> {
    pub factors: [ProjPoint<S>; 3],
}

impl<S: Scalar> TriPoint<S> {
    pub fn new(factors: [ProjPoint<S>; 3]) -> Result<Self, TriPolyError> {
        for (f, u) in factors.iter().enumerate() {
            if u[0].is_zero() && u[1].is_zero() {
                return Err(TriPolyError::ZeroPoint { factor: f });
            }
        }
        Ok(Self { factors })
    }

    pub fn from_gaussian(coords: [[(i64, i64); 2]; 3]) -> Result<Self, TriPolyError> {
        Self::new(coords.map(|u| u.map(|(re, im)| S::from_gaussian(re, im))))
    }

    /// Factorwise proportionality.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.factors
            .iter()
            .zip(&other.factors)
            .all(|(u, v)| u[0].clone() * v[1].clone() == u[1].clone() * v[0].clone())
    }

    /// Per factor, the coordinate of larger modulus (ties go to 0).
    pub fn auto_chart(&self) -> [usize; 3] {
        self.factors
            .each_ref()
            .map(|u| usize::from(u[1].modulus_sq() > u[0].modulus_sq()))
    }

    /// Representative with the chart coordinate of each factor equal to 1.
    pub fn normalized_in(&self, chart: [usize; 3]) -> Result<Self, TriPolyError> {
        let mut factors = self.factors.clone();
        for (f, u) in factors.iter_mut().enumerate() {
            let c = u[chart[f]].clone();
            if c.is_zero() {
                return Err(TriPolyError::ChartDegenerate { factor: f });
            }
            *u = [u[0].clone() / c.clone(), u[1].clone() / c];
        }
        Ok(Self { factors })
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TriPoint<T> {
        TriPoint {
            factors: self.factors.clone().map(|u| [f(&u[0]), f(&u[1])]),
        }
    }
}

impl fmt::Display for TriPoint<Complex<BigRational>> {
    /// `x0:x1,y0:y1,z0:z1`, the same syntax [`str::parse`] accepts.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|u| format!("{}:{}", format_qi(&u[0]), format_qi(&u[1])))
            .collect();
        write!(out, "{}", parts.join(","))
    }
}

impl std::str::FromStr for TriPoint<Complex<BigRational>> {
    type Err = ParseScalarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(text.to_string());
        let factors: Vec<ProjPoint<Complex<BigRational>>> = text
            .split(',')
            .map(|part| {
                let (a, b) = part.split_once(':').ok_or_else(err)?;
                Ok([parse_qi(a)?, parse_qi(b)?])
            })
            .collect::<Result<_, ParseScalarError>>()?;
        let factors: [ProjPoint<_>; 3] = factors.try_into().map_err(|_| err())?;
        TriPoint::new(factors).map_err(|_| err())
    }
}

impl serde::Serialize for TriPoint<Complex<BigRational>> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for TriPoint<Complex<BigRational>> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl TriPoint<num_complex::Complex64> {
    /// Sine-of-angle distance per factor, maximized over the three factors.
    pub fn distance(&self, other: &Self) -> f64 {
        self.factors
            .iter()
            .zip(&other.factors)
            .map(|(u, v)| {
                let cross = (u[0] * v[1] - u[1] * v[0]).norm();
                let nu = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
                let nv = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
                cross / (nu * nv)
            })
            .fold(0.0, f64::max)
    }

    /// Each factor scaled to unit norm.
    pub fn unit(&self) -> Self {
        TriPoint {
            factors: self.factors.each_ref().map(|u| {
                let n = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
                [u[0] / n, u[1] / n]
            }),
        }
    }

    /// Affine coordinate per factor in its larger-modulus chart; the
    /// lexicographic order on these keys is the canonical point order.
    pub fn chart_key(&self) -> [(usize, f64, f64); 3] {
        self.factors.each_ref().map(|u| {
            let c = usize::from(u[1].norm_sqr() > u[0].norm_sqr());
            let t = u[1 - c] / u[c];
            (c, t.re, t.im)
        })
    }

    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = (self.chart_key(), other.chart_key());
        for (p, q) in a.iter().zip(&b) {
            let ord =
                p.0.cmp(&q.0)
                    .then(p.1.total_cmp(&q.1))
                    .then(p.2.total_cmp(&q.2));
            if ord.is_ne() {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for TriPoint<num_complex::Complex64> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chart_key()
            .iter()
            .map(|&(c, re, im)| {
                let t = format!("{re:.12}{im:+.12}i");
                if c == 0 {
                    format!("1:{t}")
                } else {
                    format!("{t}:1")
                }
            })
            .collect();
        write!(out, "{}", parts.join(","))
    }
}
