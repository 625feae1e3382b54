//! Spanning P_n^2 search in dense graphs, directly and through packing.
//!
//! cargo run --example square_path_search

use sqlab::embed::{
    contains_path_square, contains_path_square_by_packing, contains_path_square_direct,
};
use sqlab::Graph;

fn main() -> sqlab::Result<()> {
    let k3 = Graph::complete(3)?;
    let cases = [
        ("K7", Graph::complete(7)?),
        ("K6 - E(K3)", k3.pad_to(6)?.complement()),
        ("K7 - E(K3)", k3.pad_to(7)?.complement()),
        ("K8 - E(S7)", Graph::star(7)?.pad_to(8)?.complement()),
    ];
    for (name, g) in cases {
        let direct = contains_path_square_direct(&g).map(|o| o.seq());
        let dual = contains_path_square_by_packing(&g).map(|o| o.seq());
        assert_eq!(direct.is_some(), dual.is_some());
        match contains_path_square(&g) {
            Some(ord) => println!("{name}: square path along {:?}", ord.seq()),
            None => println!("{name}: none"),
        }
    }
    Ok(())
}
