//! Scalar fields used throughout the crate.
//!
//! Everything that touches forms or points is generic over [`Scalar`], which is
//! implemented for `Complex<R>` where `R` is an [`OrderedField`]: `f32`, `f64`
//! or `BigRational`. The exact instance `Complex<BigRational>` is the field of
//! Gaussian rationals Q(i); the fixed points `(1:±i)` of `e3` live there.

use std::fmt::Debug;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An ordered field: the real part of a [`Scalar`].
pub trait OrderedField: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl OrderedField for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl OrderedField for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl OrderedField for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Coefficient field for forms and points: a complex field over an ordered
/// real field.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    type Real: OrderedField;

    fn from_gaussian(re: i64, im: i64) -> Self;
    fn modulus_sq(&self) -> Self::Real;
    fn to_c64(&self) -> Complex64;

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(n, 0)
    }

    fn imaginary_unit() -> Self {
        Self::from_gaussian(0, 1)
    }
}

impl<R: OrderedField> Scalar for Complex<R> {
    type Real = R;

    fn from_gaussian(re: i64, im: i64) -> Self {
        Complex::new(R::from_i64(re), R::from_i64(im))
    }

    fn modulus_sq(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Gaussian rational `re + im·i`.
pub fn qi(re: BigRational, im: BigRational) -> Complex<BigRational> {
    Complex::new(re, im)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a Gaussian rational as `a`, `bi`, `a+bi` or `a-bi` with rational
/// parts printed as `p/q`.
pub fn format_qi(z: &Complex<BigRational>) -> String {
    let im_part = |im: &BigRational| -> String {
        if im.is_one() {
            "i".to_string()
        } else if *im == -BigRational::one() {
            "-i".to_string()
        } else {
            format!("{im}i")
        }
    };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => im_part(&z.im),
        (false, false) => {
            let im = im_part(&z.im);
            if im.starts_with('-') {
                format!("{}{}", z.re, im)
            } else {
                format!("{}+{}", z.re, im)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a Gaussian rational")]
pub struct ParseScalarError(pub String);

/// Parses the forms accepted by [`format_qi`], plus plain rationals.
pub fn parse_qi(text: &str) -> Result<Complex<BigRational>, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let parse_rat = |t: &str| -> Result<BigRational, ParseScalarError> {
        match t {
            "" | "+" => Ok(BigRational::one()),
            "-" => Ok(-BigRational::one()),
            _ => BigRational::from_str(t.strip_prefix('+').unwrap_or(t)).map_err(|_| err()),
        }
    };
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (parse_rat(&body[..i])?, parse_rat(&body[i..])?),
            None => (BigRational::zero(), parse_rat(body)?),
        };
        Ok(Complex::new(re, im))
    } else {
        Ok(Complex::new(parse_rat(&s)?, BigRational::zero()))
    }
}

/// Exact square root of a rational, if it exists.
pub fn sqrt_rational(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = sqrt_bigint(r.numer())?;
    let d = sqrt_bigint(r.denom())?;
    Some(BigRational::new(n, d))
}

fn sqrt_bigint(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Exact square root in Q(i), if it exists. The root returned has
/// nonnegative real part (and nonnegative imaginary part when the real part
/// is zero).
pub fn sqrt_qi(z: &Complex<BigRational>) -> Option<Complex<BigRational>> {
    if z.is_zero() {
        return Some(z.clone());
    }
    // z = w / q with w a Gaussian integer; sqrt(z) = sqrt(w q) / q.
    let q = z.re.denom().lcm(z.im.denom());
    let u = (z.re.clone() * BigRational::from_integer(q.clone())).to_integer() * &q;
    let v = (z.im.clone() * BigRational::from_integer(q.clone())).to_integer() * &q;
    let norm = sqrt_bigint(&(&u * &u + &v * &v))?;
    let two = BigInt::from(2);
    let (x2, rem_x) = (&norm + &u).div_rem(&two);
    let (y2, rem_y) = (&norm - &u).div_rem(&two);
    if !rem_x.is_zero() || !rem_y.is_zero() {
        return None;
    }
    let x = sqrt_bigint(&x2)?;
    let mut y = sqrt_bigint(&y2)?;
    if v.is_negative() {
        y = -y;
    }
    let root_num = Complex::new(BigRational::from_integer(x), BigRational::from_integer(y));
    let check = &root_num * &root_num;
    if check.re != BigRational::from_integer(u) || check.im != BigRational::from_integer(v) {
        return None;
    }
    let qr = BigRational::from_integer(q);
    Some(Complex::new(root_num.re / qr.clone(), root_num.im / qr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(re: (i64, i64), im: (i64, i64)) -> Complex<BigRational> {
        qi(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn parse_and_format() {
        for (text, want) in [
            ("3", q((3, 1), (0, 1))),
            ("-1/2", q((-1, 2), (0, 1))),
            ("i", q((0, 1), (1, 1))),
            ("-i", q((0, 1), (-1, 1))),
            ("2/3-5/7i", q((2, 3), (-5, 7))),
            ("-1+4i", q((-1, 1), (4, 1))),
            ("7i", q((0, 1), (7, 1))),
        ] {
            let z = parse_qi(text).unwrap();
            assert_eq!(z, want, "{text}");
            assert_eq!(parse_qi(&format_qi(&z)).unwrap(), z);
        }
        assert!(parse_qi("").is_err());
        assert!(parse_qi("1/0x").is_err());
    }

    #[test]
    fn exact_square_roots() {
        let minus_one = q((-1, 1), (0, 1));
        let r = sqrt_qi(&minus_one).unwrap();
        assert_eq!(&r * &r, minus_one);
        let z = q((-5, 4), (3, 1)); // (1/2 + 3i)^2 = 1/4 - 9 + 3i
        let w = q((1, 4), (0, 1)) - q((9, 1), (0, 1)) + q((0, 1), (3, 1));
        let r = sqrt_qi(&w).unwrap();
        assert_eq!(&r * &r, w);
        assert!(sqrt_qi(&q((2, 1), (0, 1))).is_none());
        assert!(
            sqrt_qi(&z).is_none() || {
                let r = sqrt_qi(&z).unwrap();
                &r * &r == z
            }
        );
        assert_eq!(sqrt_rational(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_rational(&rat(2, 1)), None);
    }
}
