//! Simple graphs, rooted graphs and weighted multigraphs on at most 64
//! vertices, with the structural operations the invariants are built from.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex. Edges are
//! listed in a fixed canonical order (lexicographic on `(min, max)`), and an
//! [`EdgeSubset`] is a bitmask over that order.

mod chi;
mod structure;
mod text;
mod weighted;

pub use chi::chromatic_polynomial;
pub use text::{GraphRecord, PosetRecord};
pub use weighted::WeightedGraph;

use crate::error::{Error, Result};
use crate::sym::Partition;

pub const MAX_VERTICES: usize = 64;

/// An undirected edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

pub(crate) fn norm_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// `n = 0` is allowed: vertex deletions such as `G - A` can empty a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Bitmask over the canonical edge order of a particular graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub fn empty() -> Self {
        EdgeSubset(0)
    }

    /// Selects the edges at the given positions of the canonical order.
    pub fn from_indices(indices: &[usize]) -> Self {
        EdgeSubset(indices.iter().fold(0, |m, &i| m | (1u64 << i)))
    }

    /// Selects the listed edges of `g`.
    pub fn from_edges(g: &Graph, edges: &[Edge]) -> Result<Self> {
        let all = g.edges();
        let mut mask = 0u64;
        for &(u, v) in edges {
            let e = norm_edge(u, v);
            let i = all
                .iter()
                .position(|&f| f == e)
                .ok_or(Error::NotAnEdge(u, v))?;
            mask |= 1 << i;
        }
        Ok(EdgeSubset(mask))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    /// Every subset of an `m`-edge set.
    pub fn all(m: usize) -> impl Iterator<Item = EdgeSubset> {
        (0..1u64 << m).map(EdgeSubset)
    }
}

/// Largest edge count for which `2^|E|` subset sums are attempted.
pub const SUBSET_SUM_EDGE_LIMIT: usize = 30;

pub(crate) fn check_subset_guard(m: usize, limit: usize) -> Result<()> {
    if m > limit {
        return Err(Error::guard(
            format!("2^{m} edge subsets"),
            format!("|E| <= {limit}"),
        ));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn empty() -> Self {
        Graph {
            n: 0,
            adj: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from per-vertex neighbor masks; the masks must be symmetric
    /// and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds {MAX_VERTICES}"
            )));
        }
        for u in 0..n {
            if g.adj[u] & !full_mask(n) != 0 || g.adj[u] >> u & 1 == 1 {
                return Err(Error::InvalidGraph(format!("bad adjacency row {u}")));
            }
            for v in bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidGraph("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete graph")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Vertex-induced subgraph on `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |m, w| m | 1 << index[w]))
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// `G - A`: removes the vertices in `mask` and their edges.
    pub fn delete_vertices(&self, mask: u64) -> Graph {
        self.induced(self.vertex_mask() & !mask)
    }

    /// Removes edge `(u, v)`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Simple-graph contraction of edge `(u, v)`: `v` is merged into `u`,
    /// loops and parallel edges are dropped, and vertices above `v` shift
    /// down by one. Returns the new graph and the merged vertex's index.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, usize)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Identifies `v` with `u` regardless of adjacency.
    pub(crate) fn merge_vertices(&self, u: usize, v: usize) -> (Graph, usize) {
        let mut adj = self.adj.clone();
        let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
        adj[u] = merged;
        for w in bits(merged) {
            adj[w] = (adj[w] & !(1 << v)) | 1 << u;
        }
        let g = Graph { n: self.n, adj };
        let keep = self.vertex_mask() & !(1 << v);
        let new_u = if u > v { u - 1 } else { u };
        (g.induced(keep), new_u)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, with `other`'s vertices shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// `λ(G_S)`: sizes of the components of the spanning subgraph `(V, S)`.
    pub fn components_partition(&self, s: EdgeSubset) -> Partition {
        let edges = self.edges();
        let comps = self.subset_components(&edges, s);
        Partition::new(comps.iter().map(|c| c.count_ones() as usize).collect())
            .expect("nonempty components")
    }

    /// Component masks of `(V, S)` given the canonical edge list.
    pub(crate) fn subset_components(&self, edges: &[Edge], s: EdgeSubset) -> Vec<u64> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in s.indices() {
            let (u, v) = edges[i];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
            }
        }
        let mut masks = vec![0u64; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            masks[r] |= 1 << v;
        }
        masks.into_iter().filter(|&m| m != 0).collect()
    }

    /// Component masks of the whole graph.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let c = self.component_of(v, self.vertex_mask());
            seen |= c;
            out.push(c);
        }
        out
    }

    /// Vertices reachable from `v` inside `within`.
    pub(crate) fn component_of(&self, v: usize, within: u64) -> u64 {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for w in bits(frontier) {
                next |= self.adj[w] & within;
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }
}

/// A nonempty graph with one vertex marked as the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::InvalidGraph("rooted graph must be nonempty".into()));
        }
        if root >= graph.n() {
            return Err(Error::InvalidGraph(format!("root {root} out of range")));
        }
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `(λ_v^+(G_S), λ_v^-(G_S))`.
    pub fn rooted_split(&self, s: EdgeSubset) -> (usize, Partition) {
        let edges = self.graph.edges();
        self.rooted_split_with(&edges, s)
    }

    pub(crate) fn rooted_split_with(&self, edges: &[Edge], s: EdgeSubset) -> (usize, Partition) {
        let comps = self.graph.subset_components(edges, s);
        let mut root_part = 0;
        let mut rest = Vec::with_capacity(comps.len());
        for c in comps {
            let size = c.count_ones() as usize;
            if c >> self.root & 1 == 1 {
                root_part = size;
            } else {
                rest.push(size);
            }
        }
        (root_part, Partition::new(rest).expect("positive parts"))
    }

    /// Deletes an edge, keeping the root.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<RootedGraph> {
        Ok(RootedGraph {
            graph: self.graph.delete_edge(u, v)?,
            root: self.root,
        })
    }

    /// Contracts an edge at the root; the merged vertex becomes the root.
    pub fn contract_root_edge(&self, u: usize, v: usize) -> Result<RootedGraph> {
        if !self.graph.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let other = if u == self.root {
            v
        } else if v == self.root {
            u
        } else {
            return Err(Error::NotIncidentToRoot(u, v, self.root));
        };
        let (graph, root) = self.graph.contract_edge(self.root, other)?;
        Ok(RootedGraph { graph, root })
    }

    /// Smallest edge in canonical order touching the root.
    pub fn first_root_edge(&self) -> Option<Edge> {
        let r = self.root;
        bits(self.graph.neighbors(r)).map(|w| norm_edge(r, w)).min()
    }

    /// `k`-element independent sets that do (or do not) contain the root.
    pub fn independent_sets(&self, size: usize, contains_root: bool) -> Vec<u64> {
        let bit = 1u64 << self.root;
        if contains_root {
            if size == 0 {
                return Vec::new();
            }
            let allowed = self.graph.vertex_mask() & !bit & !self.graph.neighbors(self.root);
            self.graph
                .independent_sets_within(allowed, size - 1)
                .into_iter()
                .map(|m| m | bit)
                .collect()
        } else {
            self.graph
                .independent_sets_within(self.graph.vertex_mask() & !bit, size)
        }
    }

    /// Principal rooted subtrees of a rooted tree, each rooted at a child of
    /// the root.
    pub fn principal_subtrees(&self) -> Result<Vec<RootedGraph>> {
        if !self.graph.is_tree() {
            return Err(Error::NotATree);
        }
        let rest = self.graph.vertex_mask() & !(1u64 << self.root);
        bits(self.graph.neighbors(self.root))
            .map(|child| {
                let comp = self.graph.component_of(child, rest);
                let new_root = (comp & ((1u64 << child) - 1)).count_ones() as usize;
                RootedGraph::new(self.graph.induced(comp), new_root)
            })
            .collect()
    }

    pub fn relabel(&self, perm: &[usize]) -> RootedGraph {
        RootedGraph {
            graph: self.graph.relabel(perm),
            root: perm[self.root],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn components_partition_examples() {
        let g = p3();
        assert_eq!(
            g.components_partition(EdgeSubset::empty()).parts(),
            &[1, 1, 1]
        );
        assert_eq!(g.components_partition(EdgeSubset(0b11)).parts(), &[3]);
        let s = EdgeSubset::from_edges(&g, &[(0, 1)]).unwrap();
        assert_eq!(g.components_partition(s).parts(), &[2, 1]);
    }

    #[test]
    fn rooted_split_examples() {
        let mid = RootedGraph::new(p3(), 1).unwrap();
        assert_eq!(
            mid.rooted_split(EdgeSubset::empty()),
            (1, Partition::from_parts(&[1, 1]))
        );
        assert_eq!(mid.rooted_split(EdgeSubset(0b11)), (3, Partition::empty()));
        let end = RootedGraph::new(p3(), 0).unwrap();
        let s = EdgeSubset::from_edges(end.graph(), &[(0, 1)]).unwrap();
        assert_eq!(end.rooted_split(s), (2, Partition::from_parts(&[1])));
    }

    #[test]
    fn delete_and_contract() {
        let end = RootedGraph::new(p3(), 0).unwrap();
        let d = end.delete_edge(0, 1).unwrap();
        assert_eq!(d.root(), 0);
        assert_eq!(d.graph().edges(), vec![(1, 2)]);

        let c = end.contract_root_edge(0, 1).unwrap();
        assert_eq!(c.graph(), &Graph::path(2));
        assert_eq!(c.root(), 0);

        let tri = RootedGraph::new(Graph::complete(3), 0).unwrap();
        let c = tri.contract_root_edge(1, 0).unwrap();
        assert_eq!(c.graph(), &Graph::path(2));
        assert_eq!(c.root(), 0);

        assert_eq!(end.delete_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
        assert_eq!(
            end.contract_root_edge(1, 2),
            Err(Error::NotIncidentToRoot(1, 2, 0))
        );
    }

    #[test]
    fn contraction_relabels_above_merged_vertex() {
        // root 2 in path 0-1-2-3, contract (1, 2): merged root must be index 1
        let g = RootedGraph::new(Graph::path(4), 2).unwrap();
        let c = g.contract_root_edge(1, 2).unwrap();
        assert_eq!(c.root(), 1);
        assert_eq!(c.graph(), &Graph::path(3));
    }

    #[test]
    fn independent_sets_with_root() {
        let end = RootedGraph::new(p3(), 0).unwrap();
        assert_eq!(end.independent_sets(2, true), vec![0b101]);
        assert!(end.independent_sets(0, true).is_empty());
        assert_eq!(end.independent_sets(0, false), vec![0]);
        let mut no_root = end.independent_sets(1, false);
        no_root.sort();
        assert_eq!(no_root, vec![0b010, 0b100]);
    }

    #[test]
    fn principal_subtrees_of_path() {
        let mid = RootedGraph::new(p3(), 1).unwrap();
        let subs = mid.principal_subtrees().unwrap();
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().all(|s| s.n() == 1 && s.root() == 0));
        let end = RootedGraph::new(Graph::path(4), 1).unwrap();
        let mut sizes: Vec<(usize, usize)> = end
            .principal_subtrees()
            .unwrap()
            .iter()
            .map(|s| (s.n(), s.root()))
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![(1, 0), (2, 0)]);
        let cyc = RootedGraph::new(Graph::cycle(3), 0).unwrap();
        assert_eq!(cyc.principal_subtrees(), Err(Error::NotATree));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(RootedGraph::new(Graph::empty(), 0).is_err());
        assert!(RootedGraph::new(p3(), 3).is_err());
    }
}
