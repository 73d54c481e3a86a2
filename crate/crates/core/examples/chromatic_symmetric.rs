//! `X_G` of the path on three vertices, three ways.

use rooted_chromatic::chromatic::{brute_force, powersum_x, Mode};
use rooted_chromatic::graph::Graph;
use rooted_chromatic::sym::{collect_symmetric, Basis, VarRange};

fn main() -> rooted_chromatic::Result<()> {
    let g = Graph::path(3);
    let colorings = brute_force(&g, 2, Mode::All)?;
    println!("in x_0, x_1, x_2: {colorings}");
    let p = powersum_x(&g)?;
    println!("power sums:       {p}");
    println!("monomials:        {}", p.convert(Basis::Monomial)?);
    println!(
        "from colorings:   {}",
        collect_symmetric(&colorings, VarRange::All(2))?
    );
    Ok(())
}
