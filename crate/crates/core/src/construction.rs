//! Two edge-disjoint Hamiltonian paths and cycles of `LTQ_n`, `n >= 4`.
//!
//! `LTQ_4` uses two fixed paths `P` and `Q`. Each higher dimension takes the
//! pair from one dimension down, lifts it into both subcubes, and joins the
//! 0-copy to the reversed 1-copy across the cross edge at their path ends:
//! `P = P0 => rev(P1)`, `Q = Q0 => rev(Q1)`. The start and end of every
//! resulting path are adjacent, so closing them yields the two cycles.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::topology::{adjacent_values, check_dim, repeat_bits, Edge, NodeLabel};
use crate::verify;

/// A sequence of nodes that can be checked edge by edge.
pub trait Walk {
    fn dim(&self) -> u32;
    fn nodes(&self) -> &[NodeLabel];
    /// Whether the last node is joined back to the first.
    fn is_closed(&self) -> bool;

    /// Consecutive node pairs, plus the closing pair for closed walks.
    fn steps(&self) -> Vec<(NodeLabel, NodeLabel)> {
        let nodes = self.nodes();
        let mut out: Vec<_> = nodes.windows(2).map(|w| (w[0], w[1])).collect();
        if self.is_closed() && nodes.len() >= 3 {
            out.push((nodes[nodes.len() - 1], nodes[0]));
        }
        out
    }
}

fn check_nodes(dim: u32, nodes: &[NodeLabel]) -> std::result::Result<(), String> {
    let mut seen = HashSet::with_capacity(nodes.len());
    for (i, n) in nodes.iter().enumerate() {
        if n.dim() != dim {
            return Err(format!(
                "node {i} has dimension {}, expected {dim}",
                n.dim()
            ));
        }
        if !seen.insert(n.value()) {
            return Err(format!("node {n} repeats at position {i}"));
        }
    }
    for w in nodes.windows(2) {
        if !adjacent_values(w[0].value(), w[1].value()) {
            return Err(format!("{} and {} are not adjacent", w[0], w[1]));
        }
    }
    Ok(())
}

/// A simple path in `LTQ_dim`. May be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    dim: u32,
    nodes: Vec<NodeLabel>,
}

impl Path {
    pub fn new(dim: u32, nodes: Vec<NodeLabel>) -> Result<Self> {
        check_dim(dim, crate::topology::MIN_DIM)?;
        check_nodes(dim, &nodes).map_err(Error::InvalidPath)?;
        Ok(Self { dim, nodes })
    }

    /// Parses binary-string labels of length `dim`.
    pub fn from_bits<S: AsRef<str>>(dim: u32, labels: &[S]) -> Result<Self> {
        let nodes = labels
            .iter()
            .map(|s| NodeLabel::from_bits(dim, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn start(&self) -> Option<NodeLabel> {
        self.nodes.first().copied()
    }

    pub fn end(&self) -> Option<NodeLabel> {
        self.nodes.last().copied()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.nodes
            .windows(2)
            .map(|w| Edge::from_raw(w[0], w[1]))
            .collect()
    }

    /// The same nodes visited from end to start.
    pub fn reversed(&self) -> Path {
        let mut nodes = self.nodes.clone();
        nodes.reverse();
        Path {
            dim: self.dim,
            nodes,
        }
    }

    /// `self` followed by `other`, joined by the edge `end(self) - start(other)`.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let (Some(end), Some(start)) = (self.end(), other.start()) else {
            let nodes = if self.is_empty() {
                other.nodes.clone()
            } else {
                self.nodes.clone()
            };
            return Ok(Path {
                dim: self.dim,
                nodes,
            });
        };
        let own: HashSet<u32> = self.nodes.iter().map(|n| n.value()).collect();
        if let Some(n) = other.nodes.iter().find(|n| own.contains(&n.value())) {
            return Err(Error::Overlap(n.to_string()));
        }
        if !adjacent_values(end.value(), start.value()) {
            return Err(Error::Junction(end.to_string(), start.to_string()));
        }
        let mut nodes = Vec::with_capacity(self.len() + other.len());
        nodes.extend_from_slice(&self.nodes);
        nodes.extend_from_slice(&other.nodes);
        Ok(Path {
            dim: self.dim,
            nodes,
        })
    }

    /// This path moved into the `prefix`-subcube of `LTQ_{dim+1}`.
    pub fn prefixed(&self, prefix: u32) -> Result<Path> {
        check_dim(self.dim + 1, crate::topology::MIN_DIM)?;
        let nodes = self
            .nodes
            .iter()
            .map(|n| n.prefixed(prefix))
            .collect::<Result<Vec<_>>>()?;
        // Subcube edges carry over unchanged, so the result is still a path.
        Ok(Path {
            dim: self.dim + 1,
            nodes,
        })
    }

    /// Closes the path into a cycle; its ends must be adjacent.
    pub fn into_cycle(self) -> Result<Cycle> {
        Cycle::new(self.dim, self.nodes)
    }
}

impl Walk for Path {
    fn dim(&self) -> u32 {
        self.dim
    }

    fn nodes(&self) -> &[NodeLabel] {
        &self.nodes
    }

    fn is_closed(&self) -> bool {
        false
    }
}

pub fn reverse_path(p: &Path) -> Path {
    p.reversed()
}

pub fn concat_paths(p: &Path, q: &Path) -> Result<Path> {
    p.concat(q)
}

/// A cycle in `LTQ_dim`, stored in canonical rotation: it starts at its
/// smallest node and runs in the direction whose second node is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    dim: u32,
    nodes: Vec<NodeLabel>,
}

impl Cycle {
    pub fn new(dim: u32, mut nodes: Vec<NodeLabel>) -> Result<Self> {
        check_dim(dim, crate::topology::MIN_DIM)?;
        if nodes.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 nodes, found {}",
                nodes.len()
            )));
        }
        check_nodes(dim, &nodes).map_err(Error::InvalidCycle)?;
        let (first, last) = (nodes[0], nodes[nodes.len() - 1]);
        if !adjacent_values(first.value(), last.value()) {
            return Err(Error::InvalidCycle(format!(
                "closing nodes {last} and {first} are not adjacent"
            )));
        }
        canonicalize(&mut nodes);
        Ok(Self { dim, nodes })
    }

    pub fn from_bits<S: AsRef<str>>(dim: u32, labels: &[S]) -> Result<Self> {
        let nodes = labels
            .iter()
            .map(|s| NodeLabel::from_bits(dim, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.steps()
            .into_iter()
            .map(|(a, b)| Edge::from_raw(a, b))
            .collect()
    }

    /// Index of the node after position `pos`, wrapping around.
    pub fn successor(&self, pos: usize) -> usize {
        (pos + 1) % self.nodes.len()
    }
}

impl Walk for Cycle {
    fn dim(&self) -> u32 {
        self.dim
    }

    fn nodes(&self) -> &[NodeLabel] {
        &self.nodes
    }

    fn is_closed(&self) -> bool {
        true
    }
}

/// Rotates to the minimum node and picks the direction with the smaller
/// second node.
pub(crate) fn canonicalize(nodes: &mut [NodeLabel]) {
    if nodes.is_empty() {
        return;
    }
    let min_pos = nodes
        .iter()
        .enumerate()
        .min_by_key(|(_, n)| n.value())
        .map(|(i, _)| i)
        .unwrap_or(0);
    nodes.rotate_left(min_pos);
    let len = nodes.len();
    if len >= 3 && nodes[len - 1].value() < nodes[1].value() {
        nodes[1..].reverse();
    }
}

/// Two Hamiltonian paths or cycles of `LTQ_dim` with no common edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianPair<T> {
    dim: u32,
    first: T,
    second: T,
}

impl<T: Walk> HamiltonianPair<T> {
    /// Checks that both members are Hamiltonian and edge-disjoint.
    pub fn new(first: T, second: T) -> Result<Self> {
        let dim = first.dim();
        if second.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: second.dim(),
            });
        }
        for (name, member) in [("first", &first), ("second", &second)] {
            verify::hamiltonian_violation(dim, member).map_or(Ok(()), |why| {
                Err(Error::Precondition(format!("{name} member: {why}")))
            })?;
        }
        if !verify::are_edge_disjoint(&first, &second) {
            return Err(Error::Precondition("members share an edge".into()));
        }
        Ok(Self { dim, first, second })
    }
}

impl<T> HamiltonianPair<T> {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn first(&self) -> &T {
        &self.first
    }

    pub fn second(&self) -> &T {
        &self.second
    }

    pub fn members(&self) -> [&T; 2] {
        [&self.first, &self.second]
    }

    pub fn into_members(self) -> (T, T) {
        (self.first, self.second)
    }
}

const BASE_P: [&str; 16] = [
    "0010", "0110", "0111", "0101", "0100", "1100", "1110", "1010", "1000", "1001", "1011", "1101",
    "1111", "0011", "0001", "0000",
];
const BASE_Q: [&str; 16] = [
    "0110", "1110", "1111", "1001", "0101", "0011", "0010", "1010", "1011", "0111", "0001", "1101",
    "1100", "1000", "0000", "0100",
];

/// The fixed pair of edge-disjoint Hamiltonian paths of `LTQ_4`:
/// `P` from 0010 to 0000 and `Q` from 0110 to 0100.
pub fn base_paths_ltq4() -> HamiltonianPair<Path> {
    let p = Path::from_bits(4, &BASE_P).expect("base path P is valid");
    let q = Path::from_bits(4, &BASE_Q).expect("base path Q is valid");
    HamiltonianPair {
        dim: 4,
        first: p,
        second: q,
    }
}

/// Start and end nodes of the two constructed paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Endpoints {
    pub start_p: NodeLabel,
    pub end_p: NodeLabel,
    pub start_q: NodeLabel,
    pub end_q: NodeLabel,
}

/// For `dim = 4`: 0010, 0000, 0110, 0100. For `dim >= 5`:
/// `00 0^(dim-5) 010`, `10 0^(dim-5) 010`, `00 0^(dim-5) 110`, `10 0^(dim-5) 110`.
pub fn expected_endpoints(dim: u32) -> Result<Endpoints> {
    check_dim(dim, 4)?;
    let label = |s: String| NodeLabel::from_bits(dim, &s);
    if dim == 4 {
        return Ok(Endpoints {
            start_p: label("0010".into())?,
            end_p: label("0000".into())?,
            start_q: label("0110".into())?,
            end_q: label("0100".into())?,
        });
    }
    let zeros = repeat_bits("0", dim as usize - 5);
    Ok(Endpoints {
        start_p: label(format!("00{zeros}010"))?,
        end_p: label(format!("10{zeros}010"))?,
        start_q: label(format!("00{zeros}110"))?,
        end_q: label(format!("10{zeros}110"))?,
    })
}

fn lift(p: &Path) -> Result<Path> {
    p.prefixed(0)?.concat(&p.prefixed(1)?.reversed())
}

/// Two edge-disjoint Hamiltonian paths of `LTQ_dim`, built upward from the
/// `LTQ_4` base pair.
pub fn edh_paths(dim: u32) -> Result<HamiltonianPair<Path>> {
    if dim < 4 {
        return Err(Error::Refused(format!(
            "no construction below dimension 4 (LTQ_{dim} is {dim}-regular; two edge-disjoint Hamiltonian cycles need degree 4)"
        )));
    }
    check_dim(dim, 4)?;
    let mut pair = base_paths_ltq4();
    for d in 5..=dim {
        pair = HamiltonianPair {
            dim: d,
            first: lift(&pair.first)?,
            second: lift(&pair.second)?,
        };
    }
    Ok(pair)
}

/// The paths of [`edh_paths`] closed into cycles, in canonical rotation.
pub fn edh_cycles(dim: u32) -> Result<HamiltonianPair<Cycle>> {
    let (p, q) = edh_paths(dim)?.into_members();
    HamiltonianPair::new(p.into_cycle()?, q.into_cycle()?)
}
