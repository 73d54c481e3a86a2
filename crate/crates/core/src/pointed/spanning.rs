use crate::error::{Error, Result};
use crate::graph::{check_subset_guard, EdgeSubset, Graph, SUBSET_SUM_EDGE_LIMIT};

/// Two independent counts of the internal spanning trees of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalTreeCounts {
    /// Fixed points of the sign-reversing involution on connected spanning
    /// edge subsets.
    pub by_involution: u64,
    /// `f(H) = Σ_S (-1)^{|S| - (|V| - 1)}` over connected spanning subsets.
    pub by_signed_sum: i64,
}

/// [`internal_spanning_trees_ordered`] with the canonical edge order.
pub fn internal_spanning_trees(h: &Graph) -> Result<InternalTreeCounts> {
    let order: Vec<usize> = (0..h.edge_count()).collect();
    internal_spanning_trees_ordered(h, &order)
}

/// Counts internal spanning trees of `h` twice, with edges compared by
/// `rank[i]` for the `i`-th canonical edge.
///
/// The involution scans edges by increasing rank and toggles the first edge
/// whose endpoints are already joined by smaller edges of `S`.
pub fn internal_spanning_trees_ordered(h: &Graph, rank: &[usize]) -> Result<InternalTreeCounts> {
    let (edges, by_rank) = prepare(h, rank)?;
    let k = h.n().saturating_sub(1);
    let mut fixed = 0u64;
    let mut signed = 0i64;
    for s in h.connected_spanning_subsets()? {
        signed += if (s.len() + k).is_multiple_of(2) {
            1
        } else {
            -1
        };
        match toggle_edge(h.n(), &edges, &by_rank, s) {
            None => {
                if s.len() != k {
                    return Err(Error::Invalid(format!(
                        "fixed point with {} edges",
                        s.len()
                    )));
                }
                fixed += 1;
            }
            Some(i) => {
                let t = EdgeSubset(s.0 ^ (1 << i));
                if toggle_edge(h.n(), &edges, &by_rank, t) != Some(i) {
                    return Err(Error::Invalid("edge toggle is not an involution".into()));
                }
            }
        }
    }
    Ok(InternalTreeCounts {
        by_involution: fixed,
        by_signed_sum: signed,
    })
}

/// Spanning trees with no externally active edge: for every edge `e` outside
/// the tree, the cycle it closes has a larger edge than `e`.
pub fn internal_trees_by_activity(h: &Graph, rank: &[usize]) -> Result<u64> {
    let (edges, by_rank) = prepare(h, rank)?;
    let k = h.n().saturating_sub(1);
    let mut count = 0;
    for s in h.connected_spanning_subsets()? {
        if s.len() != k {
            continue;
        }
        let internal = by_rank
            .iter()
            .all(|&i| s.contains(i) || !joined_below(h.n(), &edges, &by_rank, s, i));
        if internal {
            count += 1;
        }
    }
    Ok(count)
}

type Prepared = (Vec<(usize, usize)>, Vec<usize>);

fn prepare(h: &Graph, rank: &[usize]) -> Result<Prepared> {
    if !h.is_connected() || h.n() == 0 {
        return Err(Error::Disconnected);
    }
    let m = h.edge_count();
    check_subset_guard(m, SUBSET_SUM_EDGE_LIMIT)?;
    let mut seen = vec![false; m];
    if rank.len() != m
        || rank
            .iter()
            .any(|&r| r >= m || std::mem::replace(&mut seen[r], true))
    {
        return Err(Error::Invalid(format!(
            "edge ranks must be a permutation of 0..{m}"
        )));
    }
    let mut by_rank = vec![0; m];
    for (i, &r) in rank.iter().enumerate() {
        by_rank[r] = i;
    }
    Ok((h.edges(), by_rank))
}

/// First edge (by rank) whose endpoints are joined by strictly smaller
/// edges of `s`.
fn toggle_edge(
    n: usize,
    edges: &[(usize, usize)],
    by_rank: &[usize],
    s: EdgeSubset,
) -> Option<usize> {
    by_rank
        .iter()
        .copied()
        .find(|&i| joined_below(n, edges, by_rank, s, i))
}

fn joined_below(
    n: usize,
    edges: &[(usize, usize)],
    by_rank: &[usize],
    s: EdgeSubset,
    i: usize,
) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &j in by_rank.iter().take_while(|&&j| j != i) {
        if s.contains(j) {
            let (a, b) = (find(&mut parent, edges[j].0), find(&mut parent, edges[j].1));
            parent[a] = b;
        }
    }
    find(&mut parent, edges[i].0) == find(&mut parent, edges[i].1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(g: &Graph) -> (u64, i64) {
        let c = internal_spanning_trees(g).unwrap();
        (c.by_involution, c.by_signed_sum)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(both(&Graph::complete(3)), (2, 2));
        assert_eq!(both(&Graph::cycle(4)), (3, 3));
        assert_eq!(both(&Graph::star(4)), (1, 1));
        assert_eq!(both(&Graph::path(1)), (1, 1));
    }

    #[test]
    fn complete_graphs() {
        // Tutte polynomial at (1, 0)
        assert_eq!(both(&Graph::complete(4)), (6, 6));
        assert_eq!(both(&Graph::complete(5)), (24, 24));
    }

    #[test]
    fn order_independent() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 3)])
            .unwrap();
        let base = both(&g);
        let orders = [
            [6, 5, 4, 3, 2, 1, 0],
            [3, 1, 4, 0, 5, 2, 6],
            [2, 0, 6, 1, 3, 5, 4],
        ];
        for rank in orders {
            let c = internal_spanning_trees_ordered(&g, &rank).unwrap();
            assert_eq!((c.by_involution, c.by_signed_sum), base);
            assert_eq!(internal_trees_by_activity(&g, &rank).unwrap(), base.0);
        }
    }

    #[test]
    fn rejects_disconnected_and_bad_orders() {
        assert_eq!(
            internal_spanning_trees(&Graph::new(2).unwrap()),
            Err(Error::Disconnected)
        );
        assert!(internal_spanning_trees_ordered(&Graph::path(3), &[0, 0]).is_err());
    }
}
