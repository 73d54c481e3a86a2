//! `f_0` separates the rooted trees on a given number of vertices.

use std::collections::BTreeSet;

use rooted_chromatic::enumerate::rooted_trees;
use rooted_chromatic::special::f0_tree;

fn main() -> rooted_chromatic::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for t in rooted_trees(n)? {
        seen.insert(f0_tree(&t.to_rooted_graph())?);
        total += 1;
    }
    println!(
        "{total} rooted trees on {n} vertices, {} distinct f_0",
        seen.len()
    );
    Ok(())
}
