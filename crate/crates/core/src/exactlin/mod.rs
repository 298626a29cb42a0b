//! Exact scalar and linear-algebra substrate.
//!
//! Everything here works over the rationals with arbitrary-precision
//! numerators and denominators. There is no floating point anywhere in the
//! crate.

mod laurent;
mod matrix;
mod upoly;

pub use laurent::{LaurentPoly, PoleData, RationalSeries, SeriesError};
pub use matrix::{span_basis, span_rank, Matrix};
pub use upoly::UniPoly;

use num_bigint::BigInt;
use num_traits::Zero;

/// Rational number in lowest terms with positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn scalar(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `"p/q"`, `"-7"` or a terminating decimal such as `"0.25"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = Scalar::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(Scalar::from_integer(n))
}

/// Canonical text form: integers print bare, others as `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.to_integer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar(" -7 ").unwrap(), scalar(-7));
        assert_eq!(parse_scalar("-0.25").unwrap(), ratio(-1, 4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn format_roundtrip() {
        for v in [ratio(-5, 7), scalar(12), scalar(0)] {
            assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
        }
    }
}
