//! Counts of rooted trees, free trees, graphs and posets.

use rooted_chromatic::enumerate::{free_trees, posets, rooted_trees, small_graphs};

fn main() -> rooted_chromatic::Result<()> {
    println!(" n  rooted  free  graphs  connected  posets");
    for n in 1..=6 {
        println!(
            "{n:2}  {:6}  {:4}  {:6}  {:9}  {:6}",
            rooted_trees(n)?.count(),
            free_trees(n)?.count(),
            small_graphs(n, false)?.len(),
            small_graphs(n, true)?.len(),
            posets(n)?.len()
        );
    }
    Ok(())
}
