use crate::error::{Error, Result};
use crate::graph::{bits, Graph, RootedGraph};

/// Largest vertex count for canonical codes of graphs.
pub const CANON_GRAPH_LIMIT: usize = 16;

/// Minimum over relabelings of a relation's bit code, where relabelings only
/// permute vertices with equal `invariant`s. Bits are emitted position by
/// position, so partial codes prune the search.
pub(crate) fn min_code<K: Ord + Clone>(
    n: usize,
    rel: impl Fn(usize, usize) -> bool,
    directed: bool,
    invariant: &[K],
) -> u128 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let classes: Vec<K> = order.iter().map(|&v| invariant[v].clone()).collect();
    let per_pos = |j: usize| if directed { 2 * j } else { j };
    let total: usize = (0..n).map(per_pos).sum();
    let mut search = Search {
        n,
        rel: &rel,
        directed,
        classes: &classes,
        invariant,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
        total,
    };
    search.go(0, 0, 0);
    search.best.unwrap_or(0)
}

struct Search<'a, K, F> {
    n: usize,
    rel: &'a F,
    directed: bool,
    classes: &'a [K],
    invariant: &'a [K],
    placed: Vec<usize>,
    used: u64,
    best: Option<u128>,
    total: usize,
}

impl<K: Ord, F: Fn(usize, usize) -> bool> Search<'_, K, F> {
    fn go(&mut self, pos: usize, code: u128, nbits: usize) {
        if let Some(best) = self.best {
            if nbits > 0 && code > best >> (self.total - nbits) {
                return;
            }
        }
        if pos == self.n {
            self.best = Some(self.best.map_or(code, |b| b.min(code)));
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.invariant[v] != self.classes[pos] {
                continue;
            }
            let mut c = code;
            let mut nb = nbits;
            for &u in &self.placed {
                c = c << 1 | (self.rel)(u, v) as u128;
                nb += 1;
                if self.directed {
                    c = c << 1 | (self.rel)(v, u) as u128;
                    nb += 1;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.go(pos + 1, c, nb);
            self.placed.pop();
            self.used &= !(1 << v);
        }
    }
}

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Isomorphism-invariant code of a graph: equal iff isomorphic.
pub fn graph_canonical(g: &Graph) -> Result<(usize, u128)> {
    if g.n() > CANON_GRAPH_LIMIT {
        return Err(Error::guard(
            "vertices for canonical form",
            CANON_GRAPH_LIMIT,
        ));
    }
    let inv = vertex_invariants(g);
    Ok((g.n(), min_code(g.n(), |u, v| g.has_edge(u, v), false, &inv)))
}

/// Isomorphism-invariant code of a rooted graph.
pub fn rooted_graph_canonical(g: &RootedGraph) -> Result<(usize, u128)> {
    let graph = g.graph();
    if graph.n() > CANON_GRAPH_LIMIT {
        return Err(Error::guard(
            "vertices for canonical form",
            CANON_GRAPH_LIMIT,
        ));
    }
    let inv: Vec<_> = vertex_invariants(graph)
        .into_iter()
        .enumerate()
        .map(|(v, k)| (v != g.root(), k))
        .collect();
    Ok((
        graph.n(),
        min_code(graph.n(), |u, v| graph.has_edge(u, v), false, &inv),
    ))
}

/// The graph whose canonical code is `code`, in canonical labeling.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n).expect("within vertex limit");
    let mut idx = 0;
    for j in 0..n {
        for i in 0..j {
            if code >> (total - 1 - idx) & 1 == 1 {
                g.add_edge(i, j).expect("valid edge");
            }
            idx += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_agree() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(
            graph_canonical(&g).unwrap(),
            graph_canonical(&g.relabel(&perm)).unwrap()
        );
        let (n, code) = graph_canonical(&g).unwrap();
        assert_eq!(
            graph_canonical(&graph_from_code(n, code)).unwrap(),
            (n, code)
        );
        assert_ne!(
            graph_canonical(&g).unwrap(),
            graph_canonical(&Graph::cycle(6)).unwrap()
        );
    }

    #[test]
    fn roots_matter() {
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        let mid = RootedGraph::new(Graph::path(3), 1).unwrap();
        let other_end = RootedGraph::new(Graph::path(3), 2).unwrap();
        assert_ne!(
            rooted_graph_canonical(&end).unwrap(),
            rooted_graph_canonical(&mid).unwrap()
        );
        assert_eq!(
            rooted_graph_canonical(&end).unwrap(),
            rooted_graph_canonical(&other_end).unwrap()
        );
    }
}
