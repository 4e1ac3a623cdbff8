use std::str::FromStr;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{TriForm, TriPolyError};

/// File representation of an exact (2,2,2)-form. Omitted monomials are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriFormJson {
    pub field: String,
    #[serde(default = "default_convention")]
    pub convention: String,
    pub coeffs: Vec<TriFormJsonCoeff>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriFormJsonCoeff {
    pub exp: [usize; 3],
    pub re: String,
    pub im: String,
}

fn default_convention() -> String {
    "x1-degree".to_string()
}

impl From<&TriForm<Complex<BigRational>>> for TriFormJson {
    fn from(f: &TriForm<Complex<BigRational>>) -> Self {
        let coeffs = f
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exp, c)| TriFormJsonCoeff {
                exp,
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect();
        Self {
            field: "Qi".to_string(),
            convention: default_convention(),
            coeffs,
        }
    }
}

impl TryFrom<TriFormJson> for TriForm<Complex<BigRational>> {
    type Error = TriPolyError;

    fn try_from(j: TriFormJson) -> Result<Self, Self::Error> {
        if j.field != "Qi" {
            return Err(TriPolyError::Malformed(format!(
                "unsupported field `{}`",
                j.field
            )));
        }
        if j.convention != "x1-degree" {
            return Err(TriPolyError::Malformed(format!(
                "unsupported convention `{}`",
                j.convention
            )));
        }
        let mut f = TriForm::<Complex<BigRational>>::zero();
        let parse = |s: &str| {
            BigRational::from_str(s)
                .map_err(|_| TriPolyError::Malformed(format!("bad rational `{s}`")))
        };
        for c in j.coeffs {
            if c.exp.iter().any(|&e| e > 2) {
                return Err(TriPolyError::Malformed(format!("exponent {:?}", c.exp)));
            }
            let v = Complex::new(parse(&c.re)?, parse(&c.im)?);
            let old = f.coeff(c.exp).clone();
            f.0.set_coeff(c.exp, old + v);
        }
        Ok(f)
    }
}

impl Serialize for TriForm<Complex<BigRational>> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TriFormJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriForm<Complex<BigRational>> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TriFormJson::deserialize(d)?;
        TriForm::try_from(j).map_err(serde::de::Error::custom)
    }
}
