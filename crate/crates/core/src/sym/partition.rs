use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "partition with a zero part: {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds from parts in any order; panics on a zero part.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("positive parts")
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `r_1! r_2! ...`, the factor relating augmented and ordinary monomials.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (_, r) in self.multiplicities() {
            for i in 2..=r {
                acc *= i;
            }
        }
        acc
    }

    pub fn with_part(&self, part: usize) -> Partition {
        let mut parts = self.0.clone();
        let pos = parts.partition_point(|&p| p >= part);
        parts.insert(pos, part);
        Partition(parts)
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order (`[n]` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_validates() {
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::empty().weight(), 0);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(Partition::all(3)[0].parts(), &[3]);
    }

    #[test]
    fn multiplicity_factorial() {
        assert_eq!(
            Partition::from_parts(&[2, 1, 1]).multiplicity_factorial(),
            BigInt::from(2)
        );
        assert_eq!(
            Partition::from_parts(&[2, 2, 1, 1, 1]).multiplicity_factorial(),
            BigInt::from(12)
        );
        assert_eq!(Partition::empty().multiplicity_factorial(), BigInt::from(1));
    }

    #[test]
    fn part_insertion_and_removal() {
        let p = Partition::from_parts(&[3, 1]);
        assert_eq!(p.with_part(2).parts(), &[3, 2, 1]);
        assert_eq!(p.without_part(3).unwrap().parts(), &[1]);
        assert_eq!(p.without_part(2), None);
        assert_eq!(p.to_string(), "[3,1]");
    }
}
