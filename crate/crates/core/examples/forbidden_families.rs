//! The forbidden families by order and a family-freeness check.
//!
//! cargo run --example forbidden_families

use sqlab::catalog::{first_contained_member, forbidden_base, forbidden_starred, NamedGraph};

fn main() -> sqlab::Result<()> {
    for n in 6..=14 {
        let base = forbidden_base(n)?;
        let starred = forbidden_starred(n)?;
        let names = |f: &sqlab::catalog::ForbiddenFamily| {
            f.members
                .iter()
                .map(|m| m.id.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "n={n:>2} t={} base: {{{}}} starred: {{{}}}",
            base.t,
            names(&base),
            names(&starred)
        );
    }

    let guest: NamedGraph = "k4plus+k2".parse()?;
    let g = guest.graph()?.pad_to(10)?;
    match first_contained_member(&g, &forbidden_starred(10)?) {
        Some(m) => println!("{guest} contains {}", m.id),
        None => println!("{guest} is free of the n=10 family"),
    }
    Ok(())
}
