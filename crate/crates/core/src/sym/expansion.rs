use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::transition::{check_degree, table, DEFAULT_DEGREE_BOUND};
use super::Partition;
use crate::error::{Error, Result};
use crate::poly::{rat_big, rational_to_string, Rational};

/// Basis tag of a [`SymExpansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// `m_λ`
    #[serde(rename = "m")]
    Monomial,
    /// `m̃_λ = r_1! r_2! ··· m_λ`
    #[serde(rename = "mtilde")]
    AugmentedMonomial,
    /// `p_λ`
    #[serde(rename = "p")]
    PowerSum,
    /// `e_λ`
    #[serde(rename = "e")]
    Elementary,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::AugmentedMonomial => "mtilde",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
        }
    }

    pub fn from_symbol(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "mtilde" | "m~" => Ok(Basis::AugmentedMonomial),
            "p" => Ok(Basis::PowerSum),
            "e" => Ok(Basis::Elementary),
            _ => Err(Error::Unknown {
                kind: "basis",
                name: s.into(),
            }),
        }
    }

    /// Bases whose products are concatenations of partitions.
    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::PowerSum | Basis::Elementary)
    }
}

/// A symmetric function as a finite combination `Σ c_λ b_λ` in one basis.
///
/// Zero coefficients are never stored; mixed weights are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymExpansion {
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymExpansion {
    pub fn zero(basis: Basis) -> Self {
        SymExpansion {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1, i.e. `b_∅`.
    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), Rational::from_integer(1.into()))
    }

    pub fn term(basis: Basis, lambda: Partition, c: Rational) -> Self {
        let mut s = Self::zero(basis);
        s.add_term(lambda, c);
        s
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut s = Self::zero(basis);
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    /// Integer terms given as `(coeff, parts)`.
    pub fn from_int_terms(basis: Basis, terms: &[(i64, &[usize])]) -> Self {
        Self::from_terms(
            basis,
            terms.iter().map(|(c, l)| {
                (
                    Partition::from_parts(l),
                    Rational::from_integer((*c).into()),
                )
            }),
        )
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.basis,
            self.coeffs.iter().map(|(l, a)| (l.clone(), a * c)),
        )
    }

    /// Weights of the partitions that occur.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.coeffs.keys().map(Partition::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn max_weight(&self) -> usize {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weights().len() <= 1
    }

    /// Homogeneous of the given degree (the zero expansion qualifies).
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.coeffs.keys().all(|l| l.weight() == degree)
    }

    /// Sum; `other` is converted into this expansion's basis if needed.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let other = other.convert(self.basis)?;
        let mut out = self.clone();
        for (l, c) in other.coeffs {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.basis, self.coeffs.iter().map(|(l, c)| (l.clone(), -c)))
    }

    /// Product, computed in the power-sum basis unless both factors are
    /// already in the same multiplicative basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let work = if self.basis == other.basis && self.basis.is_multiplicative() {
            self.basis
        } else {
            Basis::PowerSum
        };
        let a = self.convert(work)?;
        let b = other.convert(work)?;
        let mut out = Self::zero(work);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out.convert(self.basis)
    }

    /// Basis change with the default degree bound.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        self.convert_bounded(target, DEFAULT_DEGREE_BOUND)
    }

    /// Basis change; errors if a table-based conversion would need a degree
    /// above `bound`.
    pub fn convert_bounded(&self, target: Basis, bound: usize) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_monomial(bound)?;
        m.monomial_to(target, bound)
    }

    fn to_monomial(&self, bound: usize) -> Result<Self> {
        match self.basis {
            Basis::Monomial => Ok(self.clone()),
            Basis::AugmentedMonomial => Ok(Self::from_terms(
                Basis::Monomial,
                self.coeffs
                    .iter()
                    .map(|(l, c)| (l.clone(), c * rat_big(l.multiplicity_factorial()))),
            )),
            b => {
                let mut out = Self::zero(Basis::Monomial);
                for (l, c) in &self.coeffs {
                    check_degree(l.weight(), bound)?;
                    let t = table(b, l.weight());
                    for (mi, a) in t.to_m[t.index[l]].iter().enumerate() {
                        if !a.is_zero() {
                            out.add_term(t.parts[mi].clone(), c * a);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    fn monomial_to(&self, target: Basis, bound: usize) -> Result<Self> {
        debug_assert_eq!(self.basis, Basis::Monomial);
        match target {
            Basis::Monomial => Ok(self.clone()),
            Basis::AugmentedMonomial => Ok(Self::from_terms(
                target,
                self.coeffs
                    .iter()
                    .map(|(l, c)| (l.clone(), c / rat_big(l.multiplicity_factorial()))),
            )),
            b => {
                let mut out = Self::zero(b);
                for (mu, c) in &self.coeffs {
                    check_degree(mu.weight(), bound)?;
                    let t = table(b, mu.weight());
                    for (li, a) in t.from_m[t.index[mu]].iter().enumerate() {
                        if !a.is_zero() {
                            out.add_term(t.parts[li].clone(), c * a);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// True if every coefficient is `>= 0` in the current basis.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn is_e_positive(&self) -> Result<bool> {
        Ok(self.convert(Basis::Elementary)?.is_nonnegative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for SymExpansion {
    /// For example `2m[2,2,1] + 4m[2,1,1,1]`; largest partitions first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = match self.basis {
            Basis::AugmentedMonomial => "m~",
            b => b.symbol(),
        };
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if abs != Rational::from_integer(1.into()) {
                write!(f, "{}", rational_to_string(&abs))?;
            }
            write!(f, "{sym}{l}")?;
        }
        Ok(())
    }
}
