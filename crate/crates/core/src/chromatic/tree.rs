use super::xne0_from_x0;
use crate::error::{Error, Result};
use crate::graph::RootedGraph;
use crate::poly::MultiPoly;

/// `X_0(T_*)` of a rooted tree in `x_0, ..., x_N` by the product formula
/// `X_0(T_*) = x_0 Π_j X_{≠0}(T_{j*})` over the principal subtrees.
pub fn x0_tree_recursion(t: &RootedGraph, n_colors_max: usize) -> Result<MultiPoly> {
    if !t.graph().is_tree() {
        return Err(Error::NotATree);
    }
    Ok(rec(t, n_colors_max + 1))
}

fn rec(t: &RootedGraph, nv: usize) -> MultiPoly {
    let mut acc = MultiPoly::var(nv, 0);
    for sub in t.principal_subtrees().expect("subtree of a tree") {
        let x0 = rec(&sub, nv);
        acc = &acc * &xne0_from_x0(&x0);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{brute_force, Mode};
    use crate::graph::Graph;

    #[test]
    fn single_vertex_and_middle_rooted_path() {
        let v = RootedGraph::new(Graph::path(1), 0).unwrap();
        assert_eq!(x0_tree_recursion(&v, 2).unwrap(), MultiPoly::var(3, 0));
        let mid = RootedGraph::new(Graph::path(3), 1).unwrap();
        assert_eq!(
            x0_tree_recursion(&mid, 2).unwrap(),
            MultiPoly::from_int_terms(3, &[(2, &[1, 1, 1]), (1, &[1, 2, 0]), (1, &[1, 0, 2])])
        );
    }

    #[test]
    fn endpoint_rooted_path_matches_brute_force() {
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        assert_eq!(
            x0_tree_recursion(&end, 2).unwrap(),
            brute_force(end.graph(), 2, Mode::x0(0)).unwrap()
        );
    }

    #[test]
    fn rejects_non_trees() {
        let c = RootedGraph::new(Graph::cycle(3), 0).unwrap();
        assert_eq!(x0_tree_recursion(&c, 3), Err(Error::NotATree));
    }
}
