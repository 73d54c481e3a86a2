use std::collections::BTreeSet;

use super::canon::{graph_canonical, graph_from_code, rooted_graph_canonical};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};

/// Largest vertex count accepted by [`small_graphs`].
pub const SMALL_GRAPH_LIMIT: usize = 7;

/// All graphs on `n` vertices up to isomorphism, in canonical labeling,
/// grown one vertex at a time with every possible neighborhood.
pub fn small_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > SMALL_GRAPH_LIMIT {
        return Err(Error::OutOfRange(format!(
            "graph size {n} (max {SMALL_GRAPH_LIMIT})"
        )));
    }
    let mut level: BTreeSet<(usize, u128)> = BTreeSet::from([(0, 0)]);
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for &(m, code) in &level {
            let g = graph_from_code(m, code);
            for nbrs in 0u64..1 << m {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    *row |= (nbrs >> v & 1) << (size - 1);
                }
                adj.push(nbrs);
                next.insert(graph_canonical(&Graph::from_adjacency(adj)?)?);
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(m, code)| graph_from_code(m, code))
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

/// All rooted graphs on `n >= 1` vertices up to isomorphism.
pub fn small_rooted_graphs(n: usize, connected_only: bool) -> Result<Vec<RootedGraph>> {
    if n == 0 {
        return Err(Error::OutOfRange("rooted graphs need a vertex".into()));
    }
    let mut out = Vec::new();
    for g in small_graphs(n, connected_only)? {
        let mut seen = BTreeSet::new();
        for r in 0..n {
            let rg = RootedGraph::new(g.clone(), r)?;
            if seen.insert(rooted_graph_canonical(&rg)?) {
                out.push(rg);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..=6 {
            assert_eq!(small_graphs(n, false).unwrap().len(), all[n], "n = {n}");
            assert_eq!(
                small_graphs(n, true).unwrap().len(),
                connected[n],
                "n = {n}"
            );
        }
    }

    #[test]
    fn rooted_counts() {
        // rooted graphs: 1, 2, 6, 20; connected: 1, 1, 3, 11
        let all = [1, 2, 6, 20];
        let connected = [1, 1, 3, 11];
        for n in 1..=4 {
            assert_eq!(small_rooted_graphs(n, false).unwrap().len(), all[n - 1]);
            assert_eq!(
                small_rooted_graphs(n, true).unwrap().len(),
                connected[n - 1]
            );
        }
    }
}
