//! Exact polynomial arithmetic.
//!
//! [`MultiPoly`] is a sparse polynomial in `x_0, ..., x_N` with rational
//! coefficients; [`UniPoly`] is a dense univariate polynomial (in `q` or `x`).
//! Terms are kept in canonical order, and equality is structural.

mod multi;
mod specialize;
mod uni;

pub use multi::MultiPoly;
pub use specialize::{specialize, specialize_uni, Specialized, Target};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field used throughout.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(-4)), "-4");
        assert_eq!(rational_to_string(&rat_frac(2, -6)), "-1/3");
        assert_eq!(parse_rational("-1/3").unwrap(), rat_frac(-1, 3));
        assert_eq!(parse_rational(" 12 ").unwrap(), rat(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
