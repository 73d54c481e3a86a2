use super::{norm_edge, Graph};
use crate::error::{Error, Result};

/// Multigraph with loops and a positive integer weight on every vertex.
///
/// Edges are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} weights for {n} vertices",
                weights.len()
            )));
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidGraph(format!("vertex {v} has weight 0")));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for n = {n}"
            )));
        }
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| norm_edge(u, v)).collect();
        edges.sort_unstable();
        Ok(WeightedGraph { n, edges, weights })
    }

    /// `g` with every weight equal to 1.
    pub fn unit(g: &Graph) -> Self {
        WeightedGraph {
            n: g.n(),
            edges: g.edges(),
            weights: vec![1; g.n()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// Removes the edge at position `idx`.
    pub fn delete_edge(&self, idx: usize) -> WeightedGraph {
        let mut g = self.clone();
        g.edges.remove(idx);
        g
    }

    /// Multigraph contraction of the non-loop edge at `idx`: its endpoints
    /// merge into one vertex carrying the sum of their weights, and every
    /// other edge is kept, so parallel copies of the edge become loops.
    pub fn contract_edge(&self, idx: usize) -> WeightedGraph {
        let (u, v) = self.edges[idx];
        assert_ne!(u, v, "cannot contract a loop");
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &(a, b))| norm_edge(relabel(a), relabel(b)))
            .collect();
        let mut weights = self.weights.clone();
        weights[u] += weights[v];
        weights.remove(v);
        WeightedGraph::new(self.n - 1, edges, weights).expect("contraction preserves validity")
    }

    /// Vertex-sets of connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for x in 0..self.n {
            let r = find(&mut parent, x);
            groups[r].push(x);
        }
        groups.into_iter().filter(|g| !g.is_empty()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_adds_weights_and_keeps_parallels() {
        // two parallel edges 0-1 and an edge 1-2
        let g = WeightedGraph::new(3, vec![(0, 1), (1, 0), (1, 2)], vec![3, 1, 1]).unwrap();
        let c = g.contract_edge(0);
        assert_eq!(c.n(), 2);
        assert_eq!(c.weights(), &[4, 1]);
        assert_eq!(c.edges(), &[(0, 0), (0, 1)]);
    }

    #[test]
    fn validation() {
        assert!(WeightedGraph::new(2, vec![(0, 2)], vec![1, 1]).is_err());
        assert!(WeightedGraph::new(2, vec![], vec![1, 0]).is_err());
        assert!(WeightedGraph::new(2, vec![], vec![1]).is_err());
        assert_eq!(WeightedGraph::unit(&Graph::path(3)).total_weight(), 3);
    }
}
