//! Exhaustive generation of unlabeled rooted trees, free trees, small
//! graphs and posets, with canonical forms for isomorphism tests.

mod canon;
mod graphs;
mod poset;
mod trees;

pub use canon::{graph_canonical, graph_from_code, rooted_graph_canonical, CANON_GRAPH_LIMIT};
pub use graphs::{small_graphs, small_rooted_graphs, SMALL_GRAPH_LIMIT};
pub use poset::{posets, Poset, POSET_LIMIT};
pub use trees::{
    free_tree_canonical, free_trees, free_trees_naive, rooted_iso, rooted_trees,
    rooted_trees_naive, RootedTree, RootedTrees, FREE_TREE_LIMIT, ROOTED_TREE_LIMIT,
};
