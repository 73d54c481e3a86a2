use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, RootedGraph};

/// Largest size accepted by [`rooted_trees`].
pub const ROOTED_TREE_LIMIT: usize = 20;
/// Largest size accepted by [`free_trees`].
pub const FREE_TREE_LIMIT: usize = 18;

/// Unlabeled rooted tree stored as its canonical level sequence: vertex
/// depths in preorder, children visited in decreasing order of their own
/// sequences. Equal values are exactly the isomorphic rooted trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree(Vec<u8>);

impl RootedTree {
    /// Canonical form of a rooted tree.
    pub fn from_rooted_graph(t: &RootedGraph) -> Result<Self> {
        if !t.graph().is_tree() {
            return Err(Error::NotATree);
        }
        Ok(RootedTree(canonical(t.graph(), t.root(), usize::MAX)))
    }

    /// Validates and canonicalizes a level sequence.
    pub fn from_levels(levels: &[u8]) -> Result<Self> {
        if levels.first() != Some(&0) || levels[1..].contains(&0) {
            return Err(Error::Invalid(
                "level sequence must start with the only 0".into(),
            ));
        }
        if levels.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::Invalid(
                "level sequence jumps by more than one".into(),
            ));
        }
        Self::from_rooted_graph(&tree_from_levels(levels))
    }

    pub fn levels(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// The tree with vertices numbered in preorder; the root is 0.
    pub fn to_rooted_graph(&self) -> RootedGraph {
        tree_from_levels(&self.0)
    }

    pub fn to_graph(&self) -> Graph {
        self.to_rooted_graph().graph().clone()
    }

    /// Sizes of the principal subtrees, in canonical order.
    pub fn branch_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        for &l in &self.0[1..] {
            if l == 1 {
                sizes.push(0);
            }
            *sizes.last_mut().expect("first non-root level is 1") += 1;
        }
        sizes
    }
}

fn tree_from_levels(levels: &[u8]) -> RootedGraph {
    let mut g = Graph::new(levels.len()).expect("within vertex limit");
    let mut last_at: Vec<usize> = Vec::new();
    for (v, &l) in levels.iter().enumerate() {
        let l = l as usize;
        last_at.truncate(l);
        if let Some(&p) = last_at.last() {
            g.add_edge(p, v).expect("valid edge");
        }
        last_at.push(v);
    }
    RootedGraph::new(g, 0).expect("nonempty")
}

fn canonical(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = bits(g.neighbors(v))
        .filter(|&w| w != parent)
        .map(|w| canonical(g, w, v))
        .collect();
    kids.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![0];
    for k in kids {
        out.extend(k.into_iter().map(|l| l + 1));
    }
    out
}

/// Whether two rooted trees are isomorphic.
pub fn rooted_iso(a: &RootedGraph, b: &RootedGraph) -> Result<bool> {
    Ok(RootedTree::from_rooted_graph(a)? == RootedTree::from_rooted_graph(b)?)
}

/// All rooted trees on `n` vertices, one per isomorphism class, by the
/// level-sequence successor rule in decreasing lexicographic order.
pub fn rooted_trees(n: usize) -> Result<RootedTrees> {
    if !(1..=ROOTED_TREE_LIMIT).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "rooted tree size {n} (1..={ROOTED_TREE_LIMIT})"
        )));
    }
    Ok(RootedTrees {
        next: Some((0..n as u8).collect()),
    })
}

/// Iterator returned by [`rooted_trees`].
pub struct RootedTrees {
    next: Option<Vec<u8>>,
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        let current = self.next.take()?;
        if let Some(p) = current.iter().rposition(|&l| l > 1) {
            let q = current[..p]
                .iter()
                .rposition(|&l| l == current[p] - 1)
                .expect("parent level");
            let mut succ = current.clone();
            for i in p..succ.len() {
                succ[i] = succ[i - (p - q)];
            }
            self.next = Some(succ);
        }
        Some(RootedTree(current))
    }
}

/// All free trees on `n` vertices, one per isomorphism class, each rooted at
/// a centroid: either every branch has fewer than `n/2` vertices, or the
/// tree is two rooted trees on `n/2` vertices joined at their roots.
pub fn free_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=FREE_TREE_LIMIT).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "free tree size {n} (1..={FREE_TREE_LIMIT})"
        )));
    }
    let central = rooted_trees(n)?
        .filter(move |t| t.branch_sizes().iter().all(|&s| 2 * s < n))
        .map(|t| t.to_graph());
    let halves: Vec<RootedTree> = if n.is_multiple_of(2) {
        rooted_trees(n / 2)?.collect()
    } else {
        Vec::new()
    };
    let bicentral = (0..halves.len()).flat_map(move |i| {
        let halves = halves.clone();
        (i..halves.len()).map(move |j| {
            let mut levels = halves[i].0.clone();
            levels.extend(halves[j].0.iter().map(|l| l + 1));
            tree_from_levels(&levels).graph().clone()
        })
    });
    Ok(central.chain(bicentral))
}

/// Canonical form of a free tree: the larger rooted canonical form over its
/// centroids.
pub fn free_tree_canonical(t: &Graph) -> Result<RootedTree> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centroids(t)
        .into_iter()
        .map(|c| RootedTree(canonical(t, c, usize::MAX)))
        .max()
        .expect("a tree has a centroid"))
}

fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let heaviest: Vec<usize> = (0..n)
        .map(|v| {
            let rest = t.vertex_mask() & !(1u64 << v);
            bits(t.neighbors(v))
                .map(|w| t.component_of(w, rest).count_ones() as usize)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let best = *heaviest.iter().min().expect("nonempty");
    (0..n).filter(|&v| heaviest[v] == best).collect()
}

/// Rooted trees on `n` vertices by adding a leaf to every vertex of every
/// smaller tree and deduplicating canonical forms.
pub fn rooted_trees_naive(n: usize) -> Result<Vec<RootedTree>> {
    if !(1..=ROOTED_TREE_LIMIT).contains(&n) {
        return Err(Error::OutOfRange(format!("rooted tree size {n}")));
    }
    let mut level: BTreeSet<RootedTree> = BTreeSet::from([RootedTree(vec![0])]);
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for t in &level {
            let g = t.to_rooted_graph();
            for v in 0..size - 1 {
                let mut adj = g.graph().adjacency().to_vec();
                adj.push(1 << v);
                adj[v] |= 1 << (size - 1);
                let grown = RootedGraph::new(Graph::from_adjacency(adj)?, 0)?;
                next.insert(RootedTree::from_rooted_graph(&grown)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Free trees on `n` vertices by forgetting the root of every rooted tree
/// and deduplicating.
pub fn free_trees_naive(n: usize) -> Result<Vec<Graph>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in rooted_trees_naive(n)? {
        let g = t.to_graph();
        if seen.insert(free_tree_canonical(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROOTED: [usize; 10] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
    const FREE: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

    #[test]
    fn counts() {
        for n in 1..=10 {
            assert_eq!(
                rooted_trees(n).unwrap().count(),
                ROOTED[n - 1],
                "rooted n = {n}"
            );
            assert_eq!(free_trees(n).unwrap().count(), FREE[n - 1], "free n = {n}");
        }
        assert_eq!(free_trees(11).unwrap().count(), 235);
    }

    #[test]
    fn generated_sequences_are_canonical() {
        for n in 1..=8 {
            let fast: Vec<RootedTree> = rooted_trees(n).unwrap().collect();
            for t in &fast {
                assert_eq!(
                    &RootedTree::from_rooted_graph(&t.to_rooted_graph()).unwrap(),
                    t
                );
            }
            let mut sorted = fast.clone();
            sorted.sort();
            assert_eq!(sorted, rooted_trees_naive(n).unwrap());
            assert_eq!(free_trees_naive(n).unwrap().len(), FREE[n - 1]);
        }
    }

    #[test]
    fn free_trees_are_distinct_trees() {
        let forms: BTreeSet<_> = free_trees(9)
            .unwrap()
            .inspect(|g| assert!(g.is_tree() && g.n() == 9))
            .map(|g| free_tree_canonical(&g).unwrap())
            .collect();
        assert_eq!(forms.len(), 47);
    }

    #[test]
    fn isomorphism() {
        let a =
            RootedGraph::new(Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap(), 0).unwrap();
        let b = a.relabel(&[2, 0, 3, 1]);
        assert!(rooted_iso(&a, &b).unwrap());
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        let mid = RootedGraph::new(Graph::path(3), 1).unwrap();
        assert!(!rooted_iso(&end, &mid).unwrap());
        assert_eq!(
            rooted_iso(&RootedGraph::new(Graph::cycle(3), 0).unwrap(), &end),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn level_sequences() {
        assert_eq!(
            RootedTree::from_levels(&[0, 1, 1, 2]).unwrap().levels(),
            &[0, 1, 2, 1]
        );
        assert!(RootedTree::from_levels(&[0, 2]).is_err());
        assert_eq!(
            RootedTree::from_levels(&[0, 1, 2, 1, 1])
                .unwrap()
                .branch_sizes(),
            vec![2, 1, 1]
        );
    }
}
