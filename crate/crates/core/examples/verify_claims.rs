//! Runs a claim harness over a range of orders and prints the reports.
//!
//! cargo run --release --example verify_claims -- thm1_1 6 11

use sqlab::verify::{run_claim, Claim, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let claim: Claim = args.first().map_or("thm1_4", String::as_str).parse()?;
    let lo: usize = args.get(1).map_or(Ok(6), |s| s.parse())?;
    let hi: usize = args.get(2).map_or(Ok(lo), |s| s.parse())?;
    let cfg = VerifyConfig::default();
    for n in lo..=hi {
        let report = run_claim(claim, n, &cfg)?;
        println!("{}", report.summary());
        if !report.passed() {
            println!("{}", report.to_json());
        }
    }
    Ok(())
}
