//! Principal specializations `X_T(1, q, ..., q^{n-1})` of the free trees on `n` vertices.

use std::collections::BTreeSet;

use rooted_chromatic::enumerate::free_trees;
use rooted_chromatic::graph::Graph;
use rooted_chromatic::special::principal_specialization;

fn main() -> rooted_chromatic::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let trees: Vec<_> = free_trees(n)?.collect();
    let specs: BTreeSet<_> = trees
        .iter()
        .map(|t| principal_specialization(t, n - 1))
        .collect::<Result<_, _>>()?;
    println!(
        "{} free trees on {n} vertices, {} distinct principal specializations",
        trees.len(),
        specs.len()
    );
    let path = Graph::path(n);
    println!(
        "path: {}",
        principal_specialization(&path, n - 1)?.display("q")
    );
    Ok(())
}
