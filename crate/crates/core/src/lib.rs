//! Locally twisted cubes `LTQ_n`: adjacency, a construction of two
//! edge-disjoint Hamiltonian paths and cycles for every `n >= 4`, checkers
//! and exhaustive oracles for the construction, and a lock-step simulation
//! of all-to-all broadcast over the resulting rings.
//!
//! ```
//! use ltq::construction::edh_cycles;
//! use ltq::verify::{are_edge_disjoint, is_hamiltonian_cycle};
//! use ltq::Walk;
//!
//! let pair = edh_cycles(6).unwrap();
//! assert!(is_hamiltonian_cycle(6, pair.first().nodes()));
//! assert!(are_edge_disjoint(pair.first(), pair.second()));
//! ```

pub mod broadcast;
pub mod cli;
pub mod construction;
pub mod error;
pub mod topology;
pub mod verify;

pub use construction::{Cycle, HamiltonianPair, Path, Walk};
pub use error::{Error, Result};
pub use topology::{Edge, LtqGraph, NodeLabel};
