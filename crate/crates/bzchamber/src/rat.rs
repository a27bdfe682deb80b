//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision rational; floating
//! point never enters any computation. `Rational` is `num`'s `BigRational`,
//! which is kept reduced with a positive denominator by construction, prints
//! as `p/q` (or `p` when the denominator is 1) and parses the same syntax.

use crate::error::{Error, Result};
use num::BigInt;

pub type Rational = num::BigRational;

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0, so only use with literal denominators.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational written as `p` or `p/q` in decimal.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    trimmed
        .parse::<Rational>()
        .map_err(|_| Error::InvalidRational(trimmed.to_string()))
}
