//! Exact rational helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_u128(value: u128) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn powi(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Nearest `f64`. Falls back to a log-scaled quotient when numerator or
/// denominator overflow `f64` on their own.
pub fn to_f64(value: &Rational) -> f64 {
    if let Some(v) = value.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let sign = if value.is_negative() { -1.0 } else { 1.0 };
    let (n, d) = (value.numer().abs(), value.denom().clone());
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
    sign * n / d
}

/// Exact binary value of a finite `f64`.
pub fn from_f64(value: f64) -> Result<Rational> {
    Rational::from_float(value).ok_or_else(|| Error::domain(format!("{value} is not finite")))
}

pub fn floor_to_u64(value: &Rational) -> Option<u64> {
    value.floor().to_integer().to_u64()
}

/// Parses `"a"`, `"a/b"` or a plain decimal such as `"0.25"` into an exact value.
pub fn parse(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::domain(format!("cannot parse {text:?} as a rational number"));
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = whole.abs() * &scale + frac;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, scale));
    }
    let n: BigInt = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

pub fn display(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn serialize<S: Serializer>(
    value: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&display(value))
}

pub(crate) fn serialize_vec<S: Serializer>(
    values: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(display))
}

/// Rational lower and upper bounds on Euler's number from the truncated
/// series `sum 1/i!`, with the tail bounded by `1/(terms! * terms)`.
pub fn euler_bounds(terms: u32) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut factorial = BigInt::one();
    for i in 0..=terms {
        if i > 0 {
            factorial *= BigInt::from(i);
        }
        sum += Rational::new(BigInt::one(), factorial.clone());
    }
    let tail = Rational::new(BigInt::one(), factorial * BigInt::from(terms.max(1)));
    let upper = &sum + tail;
    (sum, upper)
}
