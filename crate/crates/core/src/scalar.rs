//! Exact rational scalars.
//!
//! Every number in this crate is a fraction of unbounded integers, stored
//! reduced with a positive denominator. Decimal input like `10.1` is parsed
//! as the exact base-10 fraction `101/10`; binary floats never enter the
//! parsing path. A float view exists for the numeric tier and for reports,
//! and it is always an explicit, lossy step.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number. Always stored reduced, denominator > 0,
/// zero canonically as 0/1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Build `numerator / denominator`; fails on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        Self::from_big(BigInt::from(numerator), BigInt::from(denominator))
    }

    /// Build from unbounded parts; fails on a zero denominator.
    pub fn from_big(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(numerator, denominator)))
    }

    /// Parse a decimal (`10.1`, `-0.5`) or fraction (`2/3`, `-7/3`) literal
    /// into an exact value. Decimals become base-10 fractions directly, so
    /// `10.1` is exactly `101/10`.
    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            return Self::from_big(n, d).map_err(|e| match e {
                Error::DivisionByZero => Error::DivisionByZero,
                other => other,
            });
        }
        match s.split_once('.') {
            None => Ok(Scalar(BigRational::from_integer(parse_int(s)?))),
            Some((int_part, frac_part)) => {
                if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("malformed number '{s}'")));
                }
                let (sign, digits) = split_sign(int_part)?;
                let int = if digits.is_empty() {
                    return Err(Error::Parse(format!("malformed number '{s}'")));
                } else {
                    BigInt::from_str(digits)
                        .map_err(|_| Error::Parse(format!("malformed number '{s}'")))?
                };
                let frac = BigInt::from_str(frac_part)
                    .map_err(|_| Error::Parse(format!("malformed number '{s}'")))?;
                let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
                let magnitude = int * &scale + frac;
                Ok(Scalar(BigRational::new(sign * magnitude, scale)))
            }
        }
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse; fails for zero.
    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    /// Exact division; fails when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power with negative exponents allowed for nonzero values.
    pub fn pow(&self, exp: i32) -> Result<Scalar> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(num_traits::Pow::pow(&self.0, exp)))
    }

    /// Lossy float view.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational representation of a finite float.
    pub fn from_f64(value: f64) -> Result<Self> {
        BigRational::from_float(value)
            .map(Scalar)
            .ok_or_else(|| Error::Parse(format!("non-finite float {value}")))
    }

    /// Fixed-point decimal rendering with round-half-even ties, for reports.
    /// `places = 2` turns `7/3` into `2.33` and `1/8` into `0.12`.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let magnitude = self.numerator().abs() * &scale;
        let denom = self.denominator();
        let (mut quot, rem) = magnitude.div_rem(denom);
        let twice = &rem * BigInt::from(2);
        let round_up = match twice.cmp(denom) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => quot.is_odd(),
        };
        if round_up {
            quot += 1;
        }
        let digits = quot.to_string();
        let sign = if self.is_negative() && !quot.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            return format!("{sign}{digits}");
        }
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = padded.len() - places;
        format!("{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

fn split_sign(text: &str) -> Result<(BigInt, &str)> {
    match text.as_bytes().first() {
        Some(b'-') => Ok((BigInt::from(-1), &text[1..])),
        Some(b'+') => Ok((BigInt::one(), &text[1..])),
        Some(_) => Ok((BigInt::one(), text)),
        None => Err(Error::Parse("empty number".into())),
    }
}

fn parse_int(text: &str) -> Result<BigInt> {
    let t = text.trim();
    let (sign, digits) = split_sign(t)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed integer '{t}'")));
    }
    Ok(sign * BigInt::from_str(digits).expect("digits checked"))
}

impl fmt::Display for Scalar {
    /// Canonical form: `p/q` when the denominator is not 1, plain `p` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigInt> for Scalar {
    fn from(value: BigInt) -> Self {
        Scalar(BigRational::from_integer(value))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where a zero
/// divisor is a reachable input.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        Scalar(&self.0 / &rhs.0)
    }
}
