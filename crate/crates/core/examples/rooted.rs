//! `X_0` and `X_{≠0}` of a rooted graph as polynomials in `z`.

use rooted_chromatic::chromatic::{x0_zpoly, xne0_zpoly};
use rooted_chromatic::graph::{Graph, RootedGraph};
use rooted_chromatic::sym::Basis;

fn main() -> rooted_chromatic::Result<()> {
    for root in [0, 1] {
        let g = RootedGraph::new(Graph::path(3), root)?;
        println!("P3 rooted at {root}");
        println!("  X_0   = {}", x0_zpoly(&g)?);
        println!("  X_≠0  = {}", xne0_zpoly(&g)?);
        println!("  X_0 in e: {}", x0_zpoly(&g)?.convert(Basis::Elementary)?);
    }
    Ok(())
}
