//! Isomorphism-class counts for sparse graphs and for all small graphs.
//!
//! cargo run --example enumerate_classes

use sqlab::enumerate::{all_graphs, partition, sparse_graphs, EnumSpec};

fn main() -> sqlab::Result<()> {
    for n in 1..=8 {
        println!("all graphs on {n} vertices: {}", all_graphs(n)?.len());
    }
    for n in 6..=12 {
        println!(
            "n={n:>2}, at most {} edges: {} classes",
            n - 2,
            sparse_graphs(n, n - 2)?.len()
        );
    }
    let spec = EnumSpec::sparse(10, 8)?;
    let sizes: Vec<usize> = partition(&spec, 4)?.iter().map(Vec::len).collect();
    println!("n=10, at most 8 edges, 4 shards: {sizes:?}");
    Ok(())
}
