//! The pointed function `P_{G,v}` and the transforms relating it to `X_0`.

use rooted_chromatic::chromatic::x0_zpoly;
use rooted_chromatic::graph::{Graph, RootedGraph};
use rooted_chromatic::pointed::{phi, pointed_p, pointed_positivity, psi};
use rooted_chromatic::sym::Basis;

fn main() -> rooted_chromatic::Result<()> {
    let g = RootedGraph::new(Graph::cycle(4), 0)?;
    let x0 = x0_zpoly(&g)?;
    let p = pointed_p(&g)?;
    println!("X_0       = {x0}");
    println!("P         = {p}");
    println!("psi(X_0)  = {}", psi(&x0)?);
    println!("phi(P)    = {}", phi(&p)?.convert(Basis::Monomial)?);
    println!("P(-z) positive in p: {}", pointed_positivity(&g)?);
    Ok(())
}
