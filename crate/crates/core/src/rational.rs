//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate is done over arbitrary-precision
//! rationals kept in lowest terms with a positive denominator, so every
//! computation and every emitted report is bit-reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational with the given integer value.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> Rational {
    BigRational::from_integer(n)
}

/// Canonical textual form: `p` when the denominator is one, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign. Inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::NumberParse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = den.parse().map_err(|_| bad())?;
    if denom == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}
