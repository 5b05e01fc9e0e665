//! Parsing and classification helpers for exact parameters.
//!
//! Half-integers are carried as doubled integers (`3/2` is stored as `3`)
//! so branch tests on parity and sign stay in integer arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serializer;

use crate::error::{Error, Result};
use crate::series::{q_to_i64, Q};

/// Parses an exact rational such as `5`, `-3/2` or `1/3`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    t.parse::<Q>().map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
}

/// Parses a value in `½ℤ` and returns it doubled.
pub fn parse_doubled(s: &str) -> Result<i64> {
    let v = parse_rational(s)?;
    doubled(&v).ok_or_else(|| Error::Parse {
        input: s.to_string(),
        reason: "expected an integer or a half-integer p/2".into(),
    })
}

/// `2v` if it is an integer.
pub fn doubled(v: &Q) -> Option<i64> {
    q_to_i64(&(v * Q::from_integer(BigInt::from(2))))
}

/// Renders a doubled value back as `p/2` or an integer.
pub fn show_doubled(x2: i64) -> String {
    if x2.is_even() {
        format!("{}", x2 / 2)
    } else {
        format!("{x2}/2")
    }
}

/// Integrality and parity of an exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatKind {
    /// An integer, with its value.
    Integer(i64),
    /// An element of `½ + ℤ`, doubled.
    HalfOdd(i64),
    /// Anything else.
    Generic,
}

pub fn classify_rational(v: &Q) -> RatKind {
    if let Some(n) = q_to_i64(v) {
        return RatKind::Integer(n);
    }
    match doubled(v) {
        Some(d) => RatKind::HalfOdd(d),
        None => RatKind::Generic,
    }
}

/// True if `v` is an integer `≥ lo`.
pub fn is_int_at_least(v: &Q, lo: i64) -> bool {
    matches!(classify_rational(v), RatKind::Integer(n) if n >= lo)
}

/// Serializes a rational as the string `num/den` (or an integer).
pub fn ser_q<S: Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qr;

    #[test]
    fn parses_halves() {
        assert_eq!(parse_doubled("3/2").unwrap(), 3);
        assert_eq!(parse_doubled("-1/2").unwrap(), -1);
        assert_eq!(parse_doubled("4").unwrap(), 8);
        assert!(parse_doubled("1/3").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(classify_rational(&qr(6, 4)), RatKind::HalfOdd(3));
        assert_eq!(classify_rational(&qr(-4, 2)), RatKind::Integer(-2));
        assert_eq!(classify_rational(&qr(1, 3)), RatKind::Generic);
        assert_eq!(show_doubled(-3), "-3/2");
        assert_eq!(show_doubled(4), "2");
    }
}
