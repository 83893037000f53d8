//! Builds the two edge-disjoint Hamiltonian cycles of LTQ_n and prints them.
//!
//! cargo run --example two_cycles -- 5

use ltq::construction::{edh_cycles, edh_paths, expected_endpoints};
use ltq::verify::are_edge_disjoint;
use ltq::Walk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);

    let paths = edh_paths(dim)?;
    let e = expected_endpoints(dim)?;
    println!("P: {} -> {}", e.start_p, e.end_p);
    println!("Q: {} -> {}", e.start_q, e.end_q);
    for (name, p) in ["P", "Q"].iter().zip(paths.members()) {
        let labels: Vec<String> = p.nodes().iter().map(|n| n.to_string()).collect();
        println!("{name} = {}", labels.join(" "));
    }

    let cycles = edh_cycles(dim)?;
    println!(
        "closed into two Hamiltonian cycles of length {}, edge-disjoint: {}",
        cycles.first().len(),
        are_edge_disjoint(cycles.first(), cycles.second())
    );
    Ok(())
}
