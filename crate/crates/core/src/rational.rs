//! Exact rational scalars and their text encoding.
//!
//! Rationals travel through JSON as strings: `"3"`, `"-7/4"`, or a finite
//! decimal such as `"0.125"` (converted exactly). Output always uses the
//! reduced `p/q` form, or a bare integer when `q = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

pub fn parse(text: &str) -> Result<Q, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
        if q.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Q::new(p, q));
    }
    parse_decimal(s).ok_or_else(|| ParseRationalError::Malformed(s.to_string()))
}

fn parse_decimal(s: &str) -> Option<Q> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let joined = format!("{whole}{frac}");
    let mut num: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().ok()? };
    if neg {
        num = -num;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        Q::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Q::new(num, num_traits::pow(ten, (-scale) as usize))
    })
}

pub fn format(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale both down by a shared power of two.
        let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
        let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact conversion of a finite double.
pub fn from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}

pub fn floor(q: &Q) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Q) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn abs(q: &Q) -> Q {
    q.abs()
}

/// Accepts a JSON integer, a JSON float (exactly converted), or a string.
pub fn from_json(v: &serde_json::Value) -> Result<Q, ParseRationalError> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Q::from_integer(BigInt::from(u)))
            } else {
                parse(&n.to_string())
            }
        }
        serde_json::Value::String(s) => parse(s),
        other => Err(ParseRationalError::Malformed(other.to_string())),
    }
}

pub fn to_json(q: &Q) -> serde_json::Value {
    serde_json::Value::String(format(q))
}
