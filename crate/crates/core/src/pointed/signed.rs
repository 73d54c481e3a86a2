use rustc_hash::FxHashMap;

use super::internal_spanning_trees;
use crate::chromatic::powersum_x;
use crate::error::{Error, Result};
use crate::graph::{bits, check_subset_guard, EdgeSubset, RootedGraph, SUBSET_SUM_EDGE_LIMIT};
use crate::poly::rat;
use crate::sym::{Basis, Partition, SymExpansion, ZPoly};

/// `P_{G,v} = Σ_{S ⊆ E} (-1)^{|S|} p_{λ_v^-(G_S)} z^{λ_v^+(G_S) - 1}`, in the
/// power-sum basis.
pub fn pointed_p(g: &RootedGraph) -> Result<ZPoly> {
    let m = g.graph().edge_count();
    check_subset_guard(m, SUBSET_SUM_EDGE_LIMIT)?;
    let edges = g.graph().edges();
    let mut acc: FxHashMap<(usize, Partition), i64> = FxHashMap::default();
    for s in EdgeSubset::all(m) {
        let (k, rest) = g.rooted_split_with(&edges, s);
        *acc.entry((k - 1, rest)).or_insert(0) += if s.len() % 2 == 0 { 1 } else { -1 };
    }
    let mut out = ZPoly::zero(Basis::PowerSum);
    for ((k, l), c) in acc {
        out.add_term(k, l, rat(c));
    }
    Ok(out)
}

/// Whether `P_{G,v}(-z)` has nonnegative monomial coefficients.
pub fn pointed_positivity(g: &RootedGraph) -> Result<bool> {
    let p = pointed_p(g)?.negate_z().convert(Basis::Monomial)?;
    let positive = p.z_terms().all(|(_, c)| c.is_nonnegative());
    Ok(positive)
}

/// `Σ_H f(H) X_{G∖H}` over connected induced subgraphs `H` on `k + 1`
/// vertices containing the root, with `X` in the power-sum basis.
pub fn ans_paw_sum(g: &RootedGraph, k: usize) -> Result<SymExpansion> {
    let graph = g.graph();
    let n = graph.n();
    if graph.edge_count() > SUBSET_SUM_EDGE_LIMIT {
        return Err(Error::guard(
            "edge count for subset sums",
            SUBSET_SUM_EDGE_LIMIT,
        ));
    }
    let mut out = SymExpansion::zero(Basis::PowerSum);
    if k >= n {
        return Ok(out);
    }
    let root_bit = 1u64 << g.root();
    let others: Vec<usize> = (0..n).filter(|&v| v != g.root()).collect();
    for sub in 0u64..1 << others.len() {
        if sub.count_ones() as usize != k {
            continue;
        }
        let mask = bits(sub).fold(root_bit, |m, i| m | 1 << others[i]);
        let h = graph.induced(mask);
        if !h.is_connected() {
            continue;
        }
        let f = internal_spanning_trees(&h)?.by_signed_sum;
        let rest = powersum_x(&graph.delete_vertices(mask))?;
        out = out.add(&rest.scale(&rat(f)))?;
    }
    Ok(out)
}

/// Checks that the coefficient of `(-z)^k` in `P_{G,v}` equals
/// [`ans_paw_sum`].
pub fn ans_paw_check(g: &RootedGraph, k: usize) -> Result<bool> {
    let coeff = pointed_p(g)?.negate_z().z_coeff(k);
    Ok(coeff.sub(&ans_paw_sum(g, k)?)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{brute_force, Mode};
    use crate::graph::Graph;
    use crate::pointed::{phi, psi};
    use crate::sym::{collect_rooted, ZPoly};

    fn rooted(n: usize, edges: &[(usize, usize)], r: usize) -> RootedGraph {
        RootedGraph::new(Graph::from_edges(n, edges).unwrap(), r).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let v = rooted(1, &[], 0);
        assert_eq!(
            pointed_p(&v).unwrap(),
            ZPoly::from_int_terms(Basis::PowerSum, &[(0, 1, &[])])
        );
        let e = rooted(2, &[(0, 1)], 0);
        assert_eq!(
            pointed_p(&e).unwrap(),
            ZPoly::from_int_terms(Basis::PowerSum, &[(0, 1, &[1]), (1, -1, &[])])
        );
    }

    #[test]
    fn matches_psi_of_brute_force() {
        let g = rooted(3, &[(0, 1), (1, 2)], 1);
        let x0 = collect_rooted(&brute_force(g.graph(), 3, Mode::x0(1)).unwrap(), 0).unwrap();
        let zp = psi(&x0).unwrap();
        assert_eq!(
            zp.convert(Basis::PowerSum).unwrap(),
            pointed_p(&g).unwrap().shift_z(1)
        );
        assert_eq!(
            phi(&pointed_p(&g).unwrap().shift_z(1))
                .unwrap()
                .convert(Basis::Monomial)
                .unwrap(),
            x0
        );
    }

    #[test]
    fn ans_paw_on_small_graphs() {
        let g = rooted(3, &[(0, 1), (1, 2)], 1);
        for k in 0..4 {
            assert!(ans_paw_check(&g, k).unwrap());
        }
        let paw = rooted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], 3);
        for k in 0..5 {
            assert!(ans_paw_check(&paw, k).unwrap(), "k = {k}");
        }
        // H = G: coefficient f(G) = f(K3) = 2
        let k3 = rooted(3, &[(0, 1), (0, 2), (1, 2)], 0);
        assert_eq!(
            pointed_p(&k3).unwrap().negate_z().z_coeff(2),
            SymExpansion::from_int_terms(Basis::PowerSum, &[(2, &[])])
        );
    }

    #[test]
    fn positivity_on_small_graphs() {
        assert!(pointed_positivity(&rooted(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], 0)).unwrap());
        assert!(pointed_positivity(&rooted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 2)).unwrap());
    }
}
