use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::graph::{check_subset_guard, EdgeSubset, Graph, RootedGraph, SUBSET_SUM_EDGE_LIMIT};
use crate::pointed::phi;
use crate::poly::rat;
use crate::sym::{Basis, Partition, SymExpansion, ZPoly};

/// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(G_S)}`, in the power-sum basis.
pub fn powersum_x(g: &Graph) -> Result<SymExpansion> {
    let m = g.edge_count();
    check_subset_guard(m, SUBSET_SUM_EDGE_LIMIT)?;
    let edges = g.edges();
    let mut acc: FxHashMap<Partition, i64> = FxHashMap::default();
    for s in EdgeSubset::all(m) {
        let comps = g.subset_components(&edges, s);
        let lambda = Partition::new(comps.iter().map(|c| c.count_ones() as usize).collect())?;
        *acc.entry(lambda).or_insert(0) += sign(s);
    }
    Ok(SymExpansion::from_terms(
        Basis::PowerSum,
        acc.into_iter().map(|(l, c)| (l, rat(c))),
    ))
}

/// `Σ_{S ⊆ E} (-1)^{|S|} p_{λ_v^-(G_S)} z^{λ_v^+(G_S)}`.
///
/// Here each `p_k` stands for `x_0^k + x_1^k + ... + x_N^k`, so this is
/// `X_0(G_*)` only after expansion over `x_0, ..., x_N` with `z -> x_0`
/// (see [`x0_zpoly`] for the canonical form).
pub fn powersum_x0(g: &RootedGraph) -> Result<ZPoly> {
    let m = g.graph().edge_count();
    check_subset_guard(m, SUBSET_SUM_EDGE_LIMIT)?;
    let edges = g.graph().edges();
    let mut acc: FxHashMap<(usize, Partition), i64> = FxHashMap::default();
    for s in EdgeSubset::all(m) {
        let (k, rest) = g.rooted_split_with(&edges, s);
        *acc.entry((k, rest)).or_insert(0) += sign(s);
    }
    let mut out = ZPoly::zero(Basis::PowerSum);
    for ((k, l), c) in acc {
        out.add_term(k, l, rat(c));
    }
    Ok(out)
}

fn sign(s: EdgeSubset) -> i64 {
    if s.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `X_G` in the monomial basis.
pub fn x_sym(g: &Graph) -> Result<SymExpansion> {
    powersum_x(g)?.convert(Basis::Monomial)
}

/// Canonical `X_0(G_*)`: monomial basis in `x_1, x_2, ...` with `z = x_0`.
///
/// Splitting `p_k(x_0, x_1, ...) = z^k + p_k(x_1, ...)` turns
/// [`powersum_x0`] into this form.
pub fn x0_zpoly(g: &RootedGraph) -> Result<ZPoly> {
    phi(&powersum_x0(g)?)?.convert(Basis::Monomial)
}

/// Canonical `X_{≠0}(G_*) = X_G - X_0(G_*)`, with `X_G` read in all of
/// `x_0, x_1, ...`.
pub fn xne0_zpoly(g: &RootedGraph) -> Result<ZPoly> {
    let x = phi(&ZPoly::from_sym(0, powersum_x(g.graph())?))?;
    x.sub(&x0_zpoly(g)?)?.convert(Basis::Monomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{brute_force, Mode};
    use crate::sym::{collect_rooted, expand_vars, expand_zpoly, VarRange};

    #[test]
    fn small_power_sum_expansions() {
        assert_eq!(
            powersum_x(&Graph::path(1)).unwrap(),
            SymExpansion::from_int_terms(Basis::PowerSum, &[(1, &[1])])
        );
        assert_eq!(
            powersum_x(&Graph::path(2)).unwrap(),
            SymExpansion::from_int_terms(Basis::PowerSum, &[(1, &[1, 1]), (-1, &[2])])
        );
        assert_eq!(
            powersum_x(&Graph::path(3)).unwrap(),
            SymExpansion::from_int_terms(
                Basis::PowerSum,
                &[(1, &[1, 1, 1]), (-2, &[2, 1]), (1, &[3])]
            )
        );
        assert_eq!(
            powersum_x(&Graph::empty()).unwrap(),
            SymExpansion::one(Basis::PowerSum)
        );
    }

    #[test]
    fn small_rooted_expansions() {
        let v = RootedGraph::new(Graph::path(1), 0).unwrap();
        assert_eq!(
            powersum_x0(&v).unwrap(),
            ZPoly::from_int_terms(Basis::PowerSum, &[(1, 1, &[])])
        );
        let e = RootedGraph::new(Graph::path(2), 0).unwrap();
        assert_eq!(
            powersum_x0(&e).unwrap(),
            ZPoly::from_int_terms(Basis::PowerSum, &[(1, 1, &[1]), (2, -1, &[])])
        );
    }

    #[test]
    fn matches_brute_force_after_expansion() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let x = brute_force(&g, 4, Mode::All).unwrap();
        assert_eq!(
            expand_vars(&powersum_x(&g).unwrap(), VarRange::All(4)).unwrap(),
            x
        );
        for r in 0..4 {
            let rg = RootedGraph::new(g.clone(), r).unwrap();
            let x0 = brute_force(&g, 4, Mode::x0(r)).unwrap();
            assert_eq!(
                expand_zpoly(&powersum_x0(&rg).unwrap(), VarRange::All(4)).unwrap(),
                x0
            );
            assert_eq!(x0_zpoly(&rg).unwrap(), collect_rooted(&x0, 0).unwrap());
            let xne0 = brute_force(&g, 4, Mode::xne0(r)).unwrap();
            assert_eq!(xne0_zpoly(&rg).unwrap(), collect_rooted(&xne0, 0).unwrap());
        }
    }
}
