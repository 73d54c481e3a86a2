use std::collections::BTreeSet;

use super::canon::min_code;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, PosetRecord};

/// Largest poset size accepted by [`posets`].
pub const POSET_LIMIT: usize = 6;

/// Finite poset on `0..n`; `below[j]` has bit `i` set iff `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    below: Vec<u64>,
}

impl Poset {
    /// Poset generated by the given strict relations `(i, j)` meaning `i < j`;
    /// the transitive closure is taken and cycles are rejected.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::OutOfRange(format!("poset size {n}")));
        }
        let mut below = vec![0u64; n];
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::OutOfRange(format!(
                    "relation ({i}, {j}) for n = {n}"
                )));
            }
            below[j] |= 1 << i;
        }
        // Warshall closure.
        for k in 0..n {
            for j in 0..n {
                if below[j] >> k & 1 == 1 {
                    below[j] |= below[k];
                }
            }
        }
        if (0..n).any(|j| below[j] >> j & 1 == 1) {
            return Err(Error::Invalid("relations contain a cycle".into()));
        }
        Ok(Poset { n, below })
    }

    pub fn from_record(r: &PosetRecord) -> Result<Self> {
        Self::new(r.n, &r.relations)
    }

    pub fn to_record(&self) -> PosetRecord {
        PosetRecord {
            n: self.n,
            relations: self.relations(),
        }
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &rel).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, &[]).expect("no relations")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    /// All strict relations `(i, j)` with `i < j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|j| bits(self.below[j]).map(move |i| (i, j)))
            .collect()
    }

    /// No induced `3 + 1`: a 3-element chain plus an element incomparable
    /// to all three.
    pub fn is_31_free(&self) -> bool {
        for b in 0..self.n {
            for a in bits(self.below[b]) {
                for c in (0..self.n).filter(|&c| self.lt(b, c)) {
                    let chain = [a, b, c];
                    if (0..self.n).any(|d| chain.iter().all(|&x| !self.comparable(x, d))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The graph joining incomparable pairs.
    pub fn incomparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("within vertex limit");
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.comparable(i, j) {
                    g.add_edge(i, j).expect("valid edge");
                }
            }
        }
        g
    }

    /// Subposet induced on `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Poset {
        let keep: Vec<usize> = bits(mask).collect();
        let rel: Vec<_> = keep
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| {
                keep.iter()
                    .enumerate()
                    .filter(move |&(_, &j)| self.lt(i, j))
                    .map(move |(b, _)| (a, b))
            })
            .collect();
        Poset::new(keep.len(), &rel).expect("subposet is acyclic")
    }

    /// Isomorphism-invariant code.
    pub fn canonical(&self) -> (usize, u128) {
        let inv: Vec<(u32, u32)> = (0..self.n)
            .map(|j| {
                let up = (0..self.n).filter(|&k| self.lt(j, k)).count() as u32;
                (self.below[j].count_ones(), up)
            })
            .collect();
        (self.n, min_code(self.n, |i, j| self.lt(i, j), true, &inv))
    }
}

/// All posets on `n` elements up to isomorphism.
///
/// Every poset has a labeling where `i < j` implies `i < j` as integers, so
/// it suffices to scan transitive subsets of the pairs `i < j`.
pub fn posets(n: usize) -> Result<Vec<Poset>> {
    if n > POSET_LIMIT {
        return Err(Error::OutOfRange(format!(
            "poset size {n} (max {POSET_LIMIT})"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in 0u64..1 << pairs.len() {
        let mut below = vec![0u64; n];
        for k in bits(s) {
            let (i, j) = pairs[k];
            below[j] |= 1 << i;
        }
        let transitive = (0..n).all(|j| bits(below[j]).all(|i| below[i] & !below[j] == 0));
        if !transitive {
            continue;
        }
        let p = Poset { n, below };
        if seen.insert(p.canonical()) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let expected = [1, 1, 2, 5, 16, 63, 318];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(posets(n).unwrap().len(), c, "n = {n}");
        }
    }

    #[test]
    fn three_plus_one() {
        assert!(Poset::chain(4).is_31_free());
        let p = Poset::new(4, &[(1, 2), (2, 3)]).unwrap();
        assert!(!p.is_31_free());
        assert!(Poset::antichain(4).is_31_free());
        assert_eq!(
            Poset::antichain(4).incomparability_graph(),
            Graph::complete(4)
        );
        assert_eq!(p.incomparability_graph(), Graph::star(3));
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert!(Poset::new(2, &[(0, 1), (1, 0)]).is_err());
        assert_eq!(Poset::from_record(&p.to_record()).unwrap(), p);
    }
}
