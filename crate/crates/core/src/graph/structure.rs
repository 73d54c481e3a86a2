use super::{bits, check_subset_guard, EdgeSubset, Graph, SUBSET_SUM_EDGE_LIMIT};
use crate::error::Result;

impl Graph {
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n()];
        for start in 0..self.n() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in bits(self.neighbors(v)) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Backtracking test for a proper coloring with `k` colors.
    pub fn is_k_colorable(&self, k: usize) -> bool {
        if self.n() == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        // Color vertices in decreasing degree order so conflicts surface early.
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut color = vec![usize::MAX; self.n()];
        fn go(
            g: &Graph,
            order: &[usize],
            i: usize,
            k: usize,
            color: &mut [usize],
            used: usize,
        ) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            let blocked: u64 = bits(g.neighbors(v))
                .filter(|&w| color[w] != usize::MAX)
                .fold(0, |m, w| m | 1 << color[w]);
            // A fresh color is interchangeable with any other fresh color.
            let limit = (used + 1).min(k);
            for c in 0..limit {
                if blocked >> c & 1 == 0 {
                    color[v] = c;
                    if go(g, order, i + 1, k, color, used.max(c + 1)) {
                        return true;
                    }
                }
            }
            color[v] = usize::MAX;
            false
        }
        go(self, &order, 0, k, &mut color, 0)
    }

    /// Least `k` admitting a proper `k`-coloring (0 for the empty graph).
    pub fn chromatic_number(&self) -> usize {
        (0..=self.n())
            .find(|&k| self.is_k_colorable(k))
            .unwrap_or(self.n())
    }

    /// Independent sets of exactly `size` vertices inside `allowed`.
    pub fn independent_sets_within(&self, allowed: u64, size: usize) -> Vec<u64> {
        fn go(g: &Graph, avail: u64, need: usize, acc: u64, out: &mut Vec<u64>) {
            if need == 0 {
                out.push(acc);
                return;
            }
            if (avail.count_ones() as usize) < need {
                return;
            }
            let v = avail.trailing_zeros() as usize;
            let rest = avail & !(1u64 << v);
            go(g, rest & !g.neighbors(v), need - 1, acc | 1 << v, out);
            go(g, rest, need, acc, out);
        }
        let mut out = Vec::new();
        go(self, allowed & self.vertex_mask(), size, 0, &mut out);
        out
    }

    pub fn independent_sets(&self, size: usize) -> Vec<u64> {
        self.independent_sets_within(self.vertex_mask(), size)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.neighbors(v) & mask == 0)
    }

    /// Edge subsets `S` for which `(V, S)` is connected.
    pub fn connected_spanning_subsets(&self) -> Result<Vec<EdgeSubset>> {
        let m = self.edge_count();
        check_subset_guard(m, SUBSET_SUM_EDGE_LIMIT)?;
        let edges = self.edges();
        Ok(EdgeSubset::all(m)
            .filter(|&s| self.subset_components(&edges, s).len() <= 1)
            .collect())
    }

    /// `|V| - #components(V, S)`.
    pub fn rank(&self, s: EdgeSubset) -> usize {
        self.n() - self.subset_components(&self.edges(), s).len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n() * self.n().saturating_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_and_chromatic_number() {
        assert!(Graph::path(3).is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
        assert!(Graph::cycle(6).is_bipartite());
        assert_eq!(Graph::path(3).chromatic_number(), 2);
        assert_eq!(Graph::complete(5).chromatic_number(), 5);
        assert_eq!(Graph::cycle(5).chromatic_number(), 3);
        assert_eq!(Graph::new(3).unwrap().chromatic_number(), 1);
        assert_eq!(Graph::empty().chromatic_number(), 0);
    }

    #[test]
    fn independent_set_counts() {
        // C5 has 5 independent 2-sets and no 3-sets.
        let c5 = Graph::cycle(5);
        assert_eq!(c5.independent_sets(2).len(), 5);
        assert!(c5.independent_sets(3).is_empty());
        assert_eq!(c5.independent_sets(0), vec![0]);
        assert!(c5.independent_sets(2).iter().all(|&m| c5.is_independent(m)));
    }

    #[test]
    fn connected_spanning_subsets_of_triangle() {
        // three spanning trees plus the full edge set
        let t = Graph::complete(3);
        assert_eq!(t.connected_spanning_subsets().unwrap().len(), 4);
        assert_eq!(
            Graph::path(4).connected_spanning_subsets().unwrap().len(),
            1
        );
        assert_eq!(t.rank(EdgeSubset(0b111)), 2);
    }
}
