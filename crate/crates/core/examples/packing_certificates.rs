//! Packing guests with P_n^2 and writing the certificates.
//!
//! cargo run --example packing_certificates -- [out_dir]

use std::path::PathBuf;

use sqlab::catalog::NamedGraph;
use sqlab::embed::{embedding_dot, packs_with_path_square, verify_certificate};
use sqlab::{Certificate, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out: Option<PathBuf> = std::env::args().nth(1).map(PathBuf::from);
    let cases: [(&str, usize); 6] = [
        ("k4", 9),
        ("k4", 10),
        ("w5", 10),
        ("g8", 11),
        ("k5", 13),
        ("s9+k2", 11),
    ];
    for (tag, n) in cases {
        let id: NamedGraph = tag.parse()?;
        let guest = id.graph()?;
        let host = Graph::path_square(n)?.complement();
        match packs_with_path_square(&guest, n) {
            None => println!("{id} with P{n}^2: NONE"),
            Some(phi) => {
                let cert = Certificate::from(&phi);
                assert!(verify_certificate(&cert, Some(&guest), &host));
                println!("{id} with P{n}^2: {}", cert.to_json());
                if let Some(dir) = &out {
                    std::fs::create_dir_all(dir)?;
                    let name = format!("{tag}_n{n}");
                    std::fs::write(
                        dir.join(format!("{name}.dot")),
                        embedding_dot(&name, &guest, &host, &phi),
                    )?;
                }
            }
        }
    }
    Ok(())
}
