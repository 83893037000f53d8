//! Edges the two cycles leave unused, and a bounded search for a third
//! edge-disjoint Hamiltonian cycle among them.
//!
//! cargo run --release --example residual_edges -- 8 10000000

use ltq::construction::edh_cycles;
use ltq::verify::{residual_analysis, DEFAULT_SEARCH_BUDGET};
use ltq::Walk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dim: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let budget: u64 = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(DEFAULT_SEARCH_BUDGET);

    let pair = edh_cycles(dim)?;
    let r = residual_analysis(dim, pair.first(), pair.second(), Some(budget))?;
    println!("LTQ_{dim}: {} unused edges", r.unused_edges.len());
    println!("residual degrees: {:?}", r.degree_histogram);
    let s = r.third_cycle.expect("search requested");
    match (&s.cycle, s.budget_exhausted) {
        (Some(c), _) => println!(
            "third cycle found after {} expansions, length {}",
            s.expansions,
            c.nodes().len()
        ),
        (None, true) => println!("no cycle within {} expansions (inconclusive)", s.expansions),
        (None, false) => println!(
            "residual graph has no Hamiltonian cycle ({} expansions, search complete)",
            s.expansions
        ),
    }
    Ok(())
}
