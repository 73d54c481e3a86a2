//! Smallest non-isomorphic pairs sharing `X_G` and sharing `X_0`.

use rooted_chromatic::harness::{search_collision, CollisionKind};

fn main() -> rooted_chromatic::Result<()> {
    for kind in [CollisionKind::XUnrooted, CollisionKind::X0Rooted] {
        for n in 1..=5 {
            let found = search_collision(kind, n)?;
            if let Some(c) = found.first() {
                println!("{} at n = {n}: {} pairs", kind.name(), found.len());
                println!("  {}\n  {}\n  {}", c.first, c.second, c.display);
                break;
            }
        }
    }
    Ok(())
}
