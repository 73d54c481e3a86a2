use rustc_hash::FxHashMap;

use super::{bits, Graph};
use crate::poly::{rat, UniPoly};

/// Chromatic polynomial `χ_G(x)` by deletion-contraction.
///
/// Components are handled separately, and complete graphs, edgeless graphs
/// and pendant vertices are closed-form base cases. Results are memoized on
/// the labeled graph for the duration of one call.
pub fn chromatic_polynomial(g: &Graph) -> UniPoly {
    let mut memo = FxHashMap::default();
    chi(g, &mut memo)
}

fn chi(g: &Graph, memo: &mut FxHashMap<Graph, UniPoly>) -> UniPoly {
    let n = g.n();
    if n == 0 {
        return UniPoly::one();
    }
    let m = g.edge_count();
    if m == 0 {
        return UniPoly::monomial(rat(1), n);
    }
    if g.is_complete() {
        return (0..n as i64)
            .map(|i| UniPoly::from_ints(&[-i, 1]))
            .product();
    }
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let comps = g.components();
    let out = if comps.len() > 1 {
        comps.iter().map(|&c| chi(&g.induced(c), memo)).product()
    } else if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
        &UniPoly::from_ints(&[-1, 1]) * &chi(&g.delete_vertices(1 << v), memo)
    } else {
        // The edge at a maximum-degree vertex shrinks the contraction most.
        let u = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
        let v = bits(g.neighbors(u)).next().unwrap();
        let deleted = g.delete_edge(u, v).expect("edge");
        let (contracted, _) = g.contract_edge(u, v).expect("edge");
        &chi(&deleted, memo) - &chi(&contracted, memo)
    };
    memo.insert(g.clone(), out.clone());
    out
}
