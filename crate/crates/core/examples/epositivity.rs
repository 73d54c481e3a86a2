//! `X_0` of rooted incomparability graphs whose remaining poset is (3+1)-free.

use rooted_chromatic::chromatic::x0_zpoly;
use rooted_chromatic::enumerate::posets;
use rooted_chromatic::graph::RootedGraph;

fn main() -> rooted_chromatic::Result<()> {
    for n in 1..=5 {
        let (mut tried, mut positive) = (0, 0);
        for poset in posets(n)? {
            for root in 0..n {
                if !poset.induced(((1u64 << n) - 1) & !(1 << root)).is_31_free() {
                    continue;
                }
                let g = RootedGraph::new(poset.incomparability_graph(), root)?;
                tried += 1;
                positive += usize::from(x0_zpoly(&g)?.is_e_positive()?);
            }
        }
        println!("n = {n}: {positive} of {tried} rooted posets give e-positive X_0");
    }
    Ok(())
}
