use super::x_sym;
use crate::error::Result;
use crate::graph::RootedGraph;
use crate::sym::{Basis, SymExpansion};

/// Whether the independent sets range over those containing the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootMembership {
    /// Coefficient of `x_0^k` in `X_0(G_*)`.
    RootIn,
    /// Coefficient of `x_0^k` in `X_{≠0}(G_*)`.
    RootOut,
}

/// `Σ_A X_{G-A}(x_1, ..., x_N)` over `k`-element independent sets `A` that
/// contain (or avoid) the root, in the monomial basis.
pub fn coeff_zk(g: &RootedGraph, k: usize, membership: RootMembership) -> Result<SymExpansion> {
    let sets = g.independent_sets(k, membership == RootMembership::RootIn);
    let mut out = SymExpansion::zero(Basis::Monomial);
    for a in sets {
        out = out.add(&x_sym(&g.graph().delete_vertices(a))?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn path_examples() {
        let mid = RootedGraph::new(Graph::path(3), 1).unwrap();
        assert_eq!(
            coeff_zk(&mid, 1, RootMembership::RootIn).unwrap(),
            SymExpansion::from_int_terms(Basis::Monomial, &[(1, &[2]), (2, &[1, 1])])
        );
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        assert_eq!(
            coeff_zk(&end, 2, RootMembership::RootIn).unwrap(),
            SymExpansion::from_int_terms(Basis::Monomial, &[(1, &[1])])
        );
        assert!(coeff_zk(&end, 0, RootMembership::RootIn).unwrap().is_zero());
    }
}
