//! All-to-all broadcast on one ring versus split over the two
//! edge-disjoint rings.
//!
//! cargo run --example ring_broadcast -- 6

use ltq::broadcast::{simulate_ring_broadcast, simulate_split_broadcast};
use ltq::construction::edh_cycles;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);
    let pair = edh_cycles(dim)?;
    let links = dim as usize * (1 << (dim - 1));

    let single = simulate_ring_broadcast(pair.first())?;
    let split = simulate_split_broadcast(pair.first(), pair.second())?;
    for (name, r) in [("single ring", &single), ("split over two rings", &split)] {
        println!(
            "{name}: {} steps, {} of {links} links used, load per link {:?}, contention {}, complete {}",
            r.steps,
            r.used_edges(),
            r.uniform_load(),
            r.contention_events,
            r.complete
        );
    }
    Ok(())
}
