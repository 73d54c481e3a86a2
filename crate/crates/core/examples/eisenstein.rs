//! Irreducibility certificates for a few small graphs.

use rooted_chromatic::graph::Graph;
use rooted_chromatic::special::{irreducibility_certificate, spec_kp};

fn main() -> rooted_chromatic::Result<()> {
    for (name, g) in [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("star", Graph::star(4)),
    ] {
        let c = irreducibility_certificate(&g)?;
        let f = spec_kp(&g, c.k, c.p as usize)?;
        println!(
            "{name}: k = {}, p = {}, Eisenstein = {}, X(q^k, 1^p) = {}",
            c.k,
            c.p,
            c.report.satisfied,
            f.display("q")
        );
    }
    Ok(())
}
