//! Tree recursion and deletion-contraction against brute-force colorings.

use rooted_chromatic::chromatic::{brute_force, x0_deletion_contraction, x0_tree_recursion, Mode};
use rooted_chromatic::enumerate::rooted_trees;

fn main() -> rooted_chromatic::Result<()> {
    let n = 6;
    let mut count = 0;
    for t in rooted_trees(n)? {
        let t = t.to_rooted_graph();
        let brute = brute_force(t.graph(), n, Mode::x0(t.root()))?;
        assert_eq!(x0_tree_recursion(&t, n)?, brute);
        assert_eq!(x0_deletion_contraction(&t, n)?, brute);
        count += 1;
    }
    println!("all three agree on the {count} rooted trees with {n} vertices");
    Ok(())
}
