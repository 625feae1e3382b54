//! Hamilton paths and cycles with their exceptional graphs.
//!
//! cargo run --example hamiltonicity

use sqlab::embed::{hamilton_cycle, hamilton_path};
use sqlab::Graph;

fn main() -> sqlab::Result<()> {
    let k5_plus_k1 = Graph::complete(5)?.pad_to(6)?;
    let k5_minus_star = Graph::star(4)?.pad_to(5)?.complement();
    let k5_minus_triangle = Graph::complete(3)?.pad_to(5)?.complement();
    for (name, g) in [
        ("K5 ∪ K1", k5_plus_k1),
        ("K5 - E(S4)", k5_minus_star),
        ("K5 - E(K3)", k5_minus_triangle),
        ("C6", Graph::cycle(6)?),
    ] {
        let path = hamilton_path(&g).map(|o| o.seq());
        let cycle = hamilton_cycle(&g).map(|o| o.seq());
        println!("{name}: path {path:?}, cycle {cycle:?}");
    }
    Ok(())
}
