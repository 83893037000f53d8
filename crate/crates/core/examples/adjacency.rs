//! Neighbours of a node in LTQ_n, the closed form next to the recursive
//! definition, and the graph as a DOT file.
//!
//! cargo run --example adjacency -- 5 10110

use ltq::cli::{cmd_topology, OutputFormat};
use ltq::topology::{cross_neighbor, neighbors, neighbors_recursive, subcube_of, NodeLabel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dim: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let node = match args.next() {
        Some(bits) => NodeLabel::from_bits(dim, &bits)?,
        None => NodeLabel::new(dim, 0b11)?,
    };

    println!("LTQ_{dim}, node {node} (subcube {})", subcube_of(node)?);
    println!("cross edge: {node} -- {}", cross_neighbor(node)?);
    for (k, n) in neighbors(node).iter().enumerate() {
        println!("  dimension {k}: {n}");
    }
    let mut closed = neighbors(node);
    closed.sort();
    assert_eq!(closed, neighbors_recursive(node));
    println!("closed form agrees with the recursive definition");

    if dim <= 4 {
        print!("{}", cmd_topology(dim, OutputFormat::Dot)?.text);
    }
    Ok(())
}
