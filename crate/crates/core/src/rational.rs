//! Exact rationals for every threshold comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"3/4"`, `"0.75"` or `"1"` exactly. Exponent notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| format!("bad numerator in {text:?}"))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| format!("bad denominator in {text:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(format!("not a number: {text:?}"));
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("not a number: {text:?}"));
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).unwrap();
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

/// `"p/q"` or `"p"`; the canonical display used in reports.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ceil_to_usize(r: &Rational) -> Option<usize> {
    if r.is_negative() {
        return None;
    }
    r.ceil().to_integer().to_usize()
}

pub fn floor_to_usize(r: &Rational) -> Option<usize> {
    if r.is_negative() {
        return None;
    }
    r.floor().to_integer().to_usize()
}

/// A rational `q >= sqrt(x)` within one ulp of the float root, verified by squaring.
pub fn sqrt_upper(x: &Rational) -> Rational {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Rational::zero();
    }
    let (rn, rd) = (x.numer().sqrt(), x.denom().sqrt());
    if &rn * &rn == *x.numer() && &rd * &rd == *x.denom() {
        return Rational::new(rn, rd);
    }
    let mut guess = to_f64(x).sqrt();
    loop {
        if let Some(q) = Rational::from_float(guess) {
            if &(&q * &q) >= x {
                return q;
            }
        }
        guess = next_up(guess);
    }
}

fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    if x > 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

pub mod serde_rational {
    //! Serializes a [`Rational`] as its `"p/q"` string.
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
