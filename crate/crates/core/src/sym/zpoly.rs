use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use super::{Basis, Partition, SymExpansion};
use crate::error::{Error, Result};
use crate::poly::{parse_rational, rational_to_string, Rational};

/// Element of `Λ[z]`: a polynomial in `z` whose coefficients are symmetric
/// functions, all in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly {
    basis: Basis,
    terms: BTreeMap<usize, SymExpansion>,
}

impl ZPoly {
    pub fn zero(basis: Basis) -> Self {
        ZPoly {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// `c · z^k`.
    pub fn from_sym(k: usize, c: SymExpansion) -> Self {
        let mut out = Self::zero(c.basis());
        out.add_z_term(k, c).expect("same basis");
        out
    }

    /// `z^k`.
    pub fn z_pow(basis: Basis, k: usize) -> Self {
        Self::from_sym(k, SymExpansion::one(basis))
    }

    /// `(z, coeff, parts)` integer triples.
    pub fn from_int_terms(basis: Basis, terms: &[(usize, i64, &[usize])]) -> Self {
        let mut out = Self::zero(basis);
        for &(k, c, l) in terms {
            out.add_term(
                k,
                Partition::from_parts(l),
                Rational::from_integer(c.into()),
            );
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(k, coefficient of z^k)` for the nonzero coefficients.
    pub fn z_terms(&self) -> impl Iterator<Item = (usize, &SymExpansion)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn z_coeff(&self, k: usize) -> SymExpansion {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| SymExpansion::zero(self.basis))
    }

    pub fn max_z(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_z(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, k: usize, lambda: &Partition) -> Rational {
        self.terms
            .get(&k)
            .map(|s| s.coeff(lambda))
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: usize, lambda: Partition, c: Rational) {
        let entry = self
            .terms
            .entry(k)
            .or_insert_with(|| SymExpansion::zero(self.basis));
        entry.add_term(lambda, c);
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Adds `c · z^k`, converting `c` into this basis.
    pub fn add_z_term(&mut self, k: usize, c: SymExpansion) -> Result<()> {
        for (l, a) in c.convert(self.basis)?.terms() {
            self.add_term(k, l.clone(), a.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &ZPoly) -> Result<ZPoly> {
        let mut out = self.clone();
        for (k, c) in other.z_terms() {
            out.add_z_term(k, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ZPoly) -> Result<ZPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ZPoly {
        self.map_coeffs(SymExpansion::neg)
    }

    pub fn scale(&self, c: &Rational) -> ZPoly {
        self.map_coeffs(|s| s.scale(c))
    }

    fn map_coeffs(&self, f: impl Fn(&SymExpansion) -> SymExpansion) -> ZPoly {
        let mut out = ZPoly::zero(self.basis);
        for (k, c) in self.z_terms() {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(k, v);
            }
        }
        out
    }

    /// Multiplies by `z^k`.
    pub fn shift_z(&self, k: usize) -> ZPoly {
        ZPoly {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(&j, c)| (j + k, c.clone()))
                .collect(),
        }
    }

    /// Divides by `z^k`; errors unless every term is divisible.
    pub fn unshift_z(&self, k: usize) -> Result<ZPoly> {
        if self.min_z().is_some_and(|m| m < k) {
            return Err(Error::Invalid(format!("not divisible by z^{k}")));
        }
        Ok(ZPoly {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(&j, c)| (j - k, c.clone()))
                .collect(),
        })
    }

    /// Multiplies every coefficient by the symmetric function `s`.
    pub fn mul_sym(&self, s: &SymExpansion) -> Result<ZPoly> {
        let mut out = ZPoly::zero(self.basis);
        for (k, c) in self.z_terms() {
            out.add_z_term(k, c.mul(s)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &ZPoly) -> Result<ZPoly> {
        let mut out = ZPoly::zero(self.basis);
        for (i, a) in self.z_terms() {
            for (j, b) in other.z_terms() {
                out.add_z_term(i + j, a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Substitutes `z -> -z`.
    pub fn negate_z(&self) -> ZPoly {
        let mut out = ZPoly::zero(self.basis);
        for (k, c) in self.z_terms() {
            out.terms
                .insert(k, if k % 2 == 1 { c.neg() } else { c.clone() });
        }
        out
    }

    pub fn convert(&self, target: Basis) -> Result<ZPoly> {
        let mut out = ZPoly::zero(target);
        for (k, c) in self.z_terms() {
            let v = c.convert(target)?;
            if !v.is_zero() {
                out.terms.insert(k, v);
            }
        }
        Ok(out)
    }

    /// Every `e_λ z^k` coefficient is nonnegative.
    pub fn is_e_positive(&self) -> Result<bool> {
        for (_, c) in self.z_terms() {
            if !c.is_e_positive()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The `z^k` coefficient is homogeneous of degree `n - k` for every `k`.
    pub fn is_graded_of(&self, n: usize) -> bool {
        self.z_terms()
            .all(|(k, c)| k <= n && c.is_homogeneous_of(n - k))
    }

    /// Sets `z = 0`.
    pub fn at_z_zero(&self) -> SymExpansion {
        self.z_coeff(0)
    }

    /// `{"basis":..,"terms":[{"z":k,"partition":[..],"coeff":"a/b"},..]}`,
    /// terms ordered by `z` and then partition.
    pub fn to_json(&self) -> Value {
        let mut terms = Vec::new();
        for (k, c) in self.z_terms() {
            for (l, a) in c.terms() {
                terms.push(json!({"z": k, "partition": l.parts(), "coeff": rational_to_string(a)}));
            }
        }
        json!({"basis": self.basis.symbol(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<ZPoly> {
        let bad = |m: &str| Error::Invalid(format!("malformed ZPoly JSON: {m}"));
        let basis = Basis::from_symbol(
            v.get("basis")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("basis"))?,
        )?;
        let mut out = ZPoly::zero(basis);
        for t in v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("terms"))?
        {
            let k = t.get("z").and_then(Value::as_u64).ok_or_else(|| bad("z"))? as usize;
            let parts = t
                .get("partition")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("partition"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("part")))
                .collect::<Result<Vec<_>>>()?;
            let c = parse_rational(
                t.get("coeff")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("coeff"))?,
            )?;
            out.add_term(k, Partition::new(parts)?, c);
        }
        Ok(out)
    }
}

impl fmt::Display for ZPoly {
    /// For example `z(2m[2,1] + m[1,1,1]) + z^2(m[1])`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.z_terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "z({c})")?,
                _ => write!(f, "z^{k}({c})")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn json_roundtrip() {
        let x = ZPoly::from_int_terms(
            Basis::Monomial,
            &[(1, 2, &[1, 1]), (2, -1, &[]), (0, 3, &[2])],
        );
        let v = x.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"basis":"m","terms":[{"coeff":"3","partition":[2],"z":0},{"coeff":"2","partition":[1,1],"z":1},{"coeff":"-1","partition":[],"z":2}]}"#
        );
        assert_eq!(ZPoly::from_json(&v).unwrap(), x);
    }

    #[test]
    fn e_positivity_examples() {
        let e21 = ZPoly::from_int_terms(Basis::Elementary, &[(0, 1, &[2, 1])]);
        assert!(e21.is_e_positive().unwrap());
        let m11 = ZPoly::from_int_terms(Basis::Monomial, &[(0, 1, &[1, 1])]);
        assert!(m11.is_e_positive().unwrap());
        let m2 = ZPoly::from_int_terms(Basis::Monomial, &[(0, 1, &[2])]);
        assert!(!m2.is_e_positive().unwrap());
    }

    #[test]
    fn shifts_and_signs() {
        let x = ZPoly::from_int_terms(Basis::PowerSum, &[(0, 1, &[1]), (1, -1, &[])]);
        assert_eq!(x.shift_z(1).unshift_z(1).unwrap(), x);
        assert!(x.unshift_z(1).is_err());
        assert_eq!(x.negate_z().coeff(1, &Partition::empty()), rat(1));
        assert!(x.is_graded_of(1));
        assert!(!x.is_graded_of(2));
    }

    #[test]
    fn mixed_basis_addition_converts() {
        let a = ZPoly::from_int_terms(Basis::Monomial, &[(0, 1, &[2])]);
        let b = ZPoly::from_int_terms(Basis::PowerSum, &[(0, -1, &[2])]);
        assert!(a.add(&b).unwrap().is_zero());
    }
}
