//! Exact spectral-radius comparisons against integers.
//!
//! cargo run --example exact_spectral_radius

use sqlab::spectral::{char_poly, compare_mu, hong_bound, mu_estimate};
use sqlab::Graph;

fn minus(n: usize, h: Graph) -> Graph {
    h.pad_to(n).unwrap().complement()
}

fn main() -> sqlab::Result<()> {
    let k = |s| Graph::complete(s).unwrap();
    let cases = [
        ("K6 - E(K3)", minus(6, k(3)), 4),
        ("K7 - E(K4^-)", minus(7, k(4).remove_edge(0, 1)?), 5),
        ("K8 - E(K4)", minus(8, k(4)), 6),
        ("K9 - E(K4)", minus(9, k(4)), 7),
        ("K12 - E(K5)", minus(12, k(5)), 10),
    ];
    for (name, g, t) in cases {
        let c = compare_mu(&g, t);
        let (lo, hi) = char_poly(&g).largest_root_bracket(30);
        println!(
            "{name}: mu {} {t}  (estimate {:.9}, exact bracket [{lo:.9}, {hi:.9}], sturm {:?})",
            c.verdict,
            mu_estimate(&g, 1e-12),
            c.sturm_lengths
        );
    }
    println!("char poly of K6 - E(K3): {}", char_poly(&minus(6, k(3))));
    let c5 = Graph::cycle(5)?;
    println!(
        "Hong bound for C5: {:.6} vs mu {:.6}",
        hong_bound(&c5)?,
        mu_estimate(&c5, 1e-12)
    );
    Ok(())
}
