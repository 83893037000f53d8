//! Exhaustive search on LTQ_3 and LTQ_4: every Hamiltonian cycle, and
//! whether two of them can be edge-disjoint.
//!
//! cargo run --example small_cube_oracle

use ltq::verify::{enumerate_hamiltonian_cycles, exists_two_edge_disjoint_hc};
use ltq::Walk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for dim in [3, 4] {
        let cycles = enumerate_hamiltonian_cycles(dim, None)?;
        println!("LTQ_{dim}: {} Hamiltonian cycles", cycles.len());
        if dim == 3 {
            for c in &cycles {
                let labels: Vec<String> = c.nodes().iter().map(|n| n.to_string()).collect();
                println!("  {}", labels.join(" "));
            }
        }
        let answer = exists_two_edge_disjoint_hc(dim)?;
        println!(
            "  two edge-disjoint Hamiltonian cycles: {} (degree bound excludes: {}, disjoint pairs found: {})",
            answer.exists, answer.excluded_by_degree, answer.disjoint_pairs
        );
    }
    Ok(())
}
