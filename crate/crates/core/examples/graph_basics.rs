//! Building graphs, squaring them, graph6 and canonical forms.
//!
//! cargo run --example graph_basics

use sqlab::{canonical_form, graph6, is_isomorphic, Graph};

fn main() -> sqlab::Result<()> {
    let p6 = Graph::path(6)?;
    let sq = p6.power2();
    assert_eq!(sq, Graph::path_square(6)?);
    println!("P6^2: {} edges, graph6 {}", sq.edge_count(), sq);
    println!("complement of P6^2: {:?}", sq.complement());

    let g = graph6::decode("DQc")?;
    println!("DQc has edges {:?}", g);

    let relabelled = g.relabel(&[4, 2, 0, 1, 3])?;
    let a = canonical_form(&g);
    let b = canonical_form(&relabelled);
    println!("canonical forms: {} and {}", a.as_str(), b.as_str());
    assert!(is_isomorphic(&g, &relabelled));

    let k4_plus = Graph::complete(4)?.add_vertex(0b1)?;
    for h in k4_plus.plus_set(1)? {
        println!(
            "K4+ with a new degree-1 vertex: degrees {:?}",
            h.degree_sequence()
        );
    }
    Ok(())
}
