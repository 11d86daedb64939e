use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Exact rational number used for every time point and fluent value.
pub type Real = BigRational;

/// Parses an exact rational from `12`, `-3/4` or `0.125`.
///
/// Decimals are read exactly (`0.1` is `1/10`), never through a float.
pub fn parse_real(text: &str) -> Option<Real> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    if body.is_empty() || body.starts_with('-') || body.starts_with('+') {
        return None;
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = digits(num)?;
        let den = digits(den)?;
        if den.is_zero() {
            return None;
        }
        BigRational::new(num, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        let int = digits(int)?;
        let scale = BigInt::from(10u32).pow(u32::try_from(frac.len()).ok()?);
        let frac = digits(frac)?;
        BigRational::new(int * &scale + frac, scale)
    } else {
        BigRational::from_integer(digits(body)?)
    };
    Some(if negative { -value } else { value })
}

fn digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// A point on the (finite) time line, in seconds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimePoint(Real);

impl TimePoint {
    pub fn new(value: Real) -> Self {
        TimePoint(value)
    }

    pub fn zero() -> Self {
        TimePoint(Real::zero())
    }

    pub fn value(&self) -> &Real {
        &self.0
    }

    pub fn into_value(self) -> Real {
        self.0
    }
}

impl From<i64> for TimePoint {
    fn from(value: i64) -> Self {
        TimePoint(Real::from_integer(value.into()))
    }
}

impl From<Real> for TimePoint {
    fn from(value: Real) -> Self {
        TimePoint(value)
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A constant of the discrete sort: argument of an action or value of a
/// discrete fluent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Bool(bool),
    Real(Real),
    Symbol(String),
}

impl Value {
    pub fn int(n: i64) -> Self {
        Value::Real(Real::from_integer(n.into()))
    }

    pub fn symbol(name: impl Into<String>) -> Self {
        Value::Symbol(name.into())
    }

    pub fn as_real(&self) -> Option<&Real> {
        match self {
            Value::Real(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Value::Bool(_) => "boolean",
            Value::Real(_) => "real",
            Value::Symbol(_) => "symbol",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Real(r) => write!(f, "{r}"),
            Value::Symbol(s) => f.write_str(s),
        }
    }
}
