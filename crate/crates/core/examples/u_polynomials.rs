//! `U`, `W` and rooted `U` polynomials, and recovery of `X_G` from `U_G`.

use rooted_chromatic::chromatic::x_sym;
use rooted_chromatic::graph::{Graph, RootedGraph, WeightedGraph};
use rooted_chromatic::pointed::{rooted_u, u_poly, w_poly, x_from_u};
use rooted_chromatic::sym::Basis;

fn main() -> rooted_chromatic::Result<()> {
    let g = Graph::path(3);
    let u = u_poly(&g)?;
    println!("U(P3)        = {u}");
    println!("W(unit P3)   = {}", w_poly(&WeightedGraph::unit(&g))?);
    println!(
        "U_r(P3, 1)   = {}",
        rooted_u(&RootedGraph::new(g.clone(), 1)?)?
    );
    let x = x_from_u(&u)?;
    assert_eq!(
        x.convert(Basis::Monomial)?,
        x_sym(&g)?.convert(Basis::Monomial)?
    );
    println!("X from U     = {x}");
    Ok(())
}
