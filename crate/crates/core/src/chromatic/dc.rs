use rustc_hash::FxHashMap;

use super::powersum_x;
use crate::error::Result;
use crate::graph::RootedGraph;
use crate::poly::MultiPoly;
use crate::sym::{expand_vars, VarRange};

/// `X_0(G_*)` in `x_0, ..., x_N` by `X_0(G_*) = X_0(G_* - e) - x_0 X_0(G_{e*})`
/// on the smallest edge `e` at the root.
///
/// When no edge touches the root, `X_0(G_*) = x_0 X(G - r; x_0, ..., x_N)`,
/// with `X(G - r)` taken from its power-sum expansion.
pub fn x0_deletion_contraction(g: &RootedGraph, n_colors_max: usize) -> Result<MultiPoly> {
    let mut memo = FxHashMap::default();
    rec(g, n_colors_max, &mut memo)
}

fn rec(
    g: &RootedGraph,
    nmax: usize,
    memo: &mut FxHashMap<RootedGraph, MultiPoly>,
) -> Result<MultiPoly> {
    if let Some(p) = memo.get(g) {
        return Ok(p.clone());
    }
    let out = match g.first_root_edge() {
        None => {
            let rest = g.graph().delete_vertices(1 << g.root());
            expand_vars(&powersum_x(&rest)?, VarRange::All(nmax))?.mul_var(0)
        }
        Some((u, v)) => {
            let deleted = rec(&g.delete_edge(u, v)?, nmax, memo)?;
            let contracted = rec(&g.contract_root_edge(u, v)?, nmax, memo)?;
            &deleted - &contracted.mul_var(0)
        }
    };
    memo.insert(g.clone(), out.clone());
    Ok(out)
}
