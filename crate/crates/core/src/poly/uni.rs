use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{parse_rational, rat, rational_to_string, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[d]` is the coefficient of `q^d`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and [`UniPoly::degree`] returns `None` for it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable itself.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `q^n f(1/q)`: the coefficient sequence `(a_0, ..., a_n)` reversed.
    pub fn rev(&self, n: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::ReversalBound {
                    degree: d,
                    bound: n,
                });
            }
        }
        let coeffs = (0..=n).map(|i| self.coeff(n - i)).collect();
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.numer().clone())
                } else {
                    Err(Error::NonInteger(rational_to_string(c)))
                }
            })
            .collect()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn to_json(&self, var: &str) -> Value {
        json!({
            "var": var,
            "coeffs": self.coeffs.iter().map(rational_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("missing \"coeffs\" array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Invalid("coefficient must be a string".into()))
                    .and_then(parse_rational)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = rational_to_string(&abs);
            match d {
                0 => out.push_str(&coeff),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push_str(var);
                    if d > 1 {
                        out.push('^');
                        out.push_str(&d.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("q"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for UniPoly {
    fn product<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_frac;

    #[test]
    fn difference_of_squares() {
        let a = UniPoly::from_ints(&[1, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(UniPoly::from_ints(&[3, 0, 7]).pow(0), UniPoly::one());
        assert_eq!(
            UniPoly::from_ints(&[1, 1]).pow(3),
            UniPoly::from_ints(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn trims_and_degree() {
        let p = UniPoly::from_ints(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(UniPoly::from_ints(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn reversal() {
        // f = q^3 + 3q^2 -> 3q + 1
        let f = UniPoly::from_ints(&[0, 0, 3, 1]);
        assert_eq!(f.rev(3).unwrap(), UniPoly::from_ints(&[1, 3]));
        assert_eq!(
            UniPoly::one().rev(2).unwrap(),
            UniPoly::from_ints(&[0, 0, 1])
        );
        assert!(f.rev(2).is_err());
        assert_eq!(f.rev(5).unwrap().rev(5).unwrap(), f);
    }

    #[test]
    fn json_roundtrip_and_display() {
        let f = UniPoly::from_coeffs(vec![rat_frac(-1, 3), rat(0), rat(2)]);
        let v = f.to_json("q");
        assert_eq!(v.to_string(), r#"{"coeffs":["-1/3","0","2"],"var":"q"}"#);
        assert_eq!(UniPoly::from_json(&v).unwrap(), f);
        assert_eq!(f.display("q"), "2q^2 - 1/3");
        assert_eq!(UniPoly::from_ints(&[0, -1]).display("x"), "-x");
    }
}
