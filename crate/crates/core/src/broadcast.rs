//! Lock-step simulation of all-to-all broadcast along ring embeddings.
//!
//! Every node starts with one unit message per ring. At each step a node
//! forwards to its ring successor the message it received in the previous
//! step (its own message at step 1), so a ring of `L` nodes finishes after
//! `L - 1` steps. Splitting messages over two edge-disjoint rings runs both
//! rings at once with no link carrying traffic from more than one ring.

use std::collections::{BTreeMap, HashMap};

use serde::{Serialize, Serializer};

use crate::construction::{Cycle, Walk};
use crate::error::{Error, Result};
use crate::topology::{Edge, NodeLabel};
use crate::verify::{are_edge_disjoint, hamiltonian_violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone)]
pub struct RingSchedule {
    pub ring: Cycle,
    pub direction: Direction,
    pub message_class: String,
}

impl RingSchedule {
    /// Requires `ring` to be Hamiltonian.
    pub fn new(
        ring: Cycle,
        direction: Direction,
        message_class: impl Into<String>,
    ) -> Result<Self> {
        if let Some(why) = hamiltonian_violation(ring.dim(), &ring) {
            return Err(Error::Precondition(format!(
                "ring is not Hamiltonian: {why}"
            )));
        }
        Ok(Self {
            ring,
            direction,
            message_class: message_class.into(),
        })
    }

    fn order(&self) -> Vec<u32> {
        let mut order: Vec<u32> = self.ring.nodes().iter().map(|n| n.value()).collect();
        if self.direction == Direction::Backward {
            order.reverse();
        }
        order
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrafficReport {
    pub rings: usize,
    pub steps: usize,
    /// Total traversals per undirected edge, over all steps and rings.
    #[serde(serialize_with = "serialize_loads")]
    pub per_edge_load: BTreeMap<Edge, u64>,
    /// Most messages crossing one edge within one step.
    pub max_concurrent_per_edge: u64,
    /// (edge, step) pairs used by more than one ring.
    pub contention_events: u64,
    pub messages_delivered: u64,
    /// Fewest messages of a single class held by any node at the end.
    pub min_messages_held: usize,
    /// Every node holds every message of every class.
    pub complete: bool,
}

impl TrafficReport {
    pub fn used_edges(&self) -> usize {
        self.per_edge_load.len()
    }

    /// The common load of all used edges, if they all carry the same.
    pub fn uniform_load(&self) -> Option<u64> {
        let mut loads = self.per_edge_load.values();
        let first = *loads.next()?;
        loads.all(|&l| l == first).then_some(first)
    }
}

#[derive(Serialize)]
struct EdgeLoad<'a> {
    edge: &'a Edge,
    load: u64,
}

fn serialize_loads<S: Serializer>(
    loads: &BTreeMap<Edge, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(loads.iter().map(|(edge, &load)| EdgeLoad { edge, load }))
}

struct Holdings {
    words: usize,
    bits: Vec<u64>,
}

impl Holdings {
    fn new(nodes: usize) -> Self {
        let words = nodes.div_ceil(64);
        Self {
            words,
            bits: vec![0; words * nodes],
        }
    }

    fn insert(&mut self, node: usize, origin: usize) {
        self.bits[node * self.words + origin / 64] |= 1 << (origin % 64);
    }

    fn count(&self, node: usize) -> usize {
        self.bits[node * self.words..(node + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }
}

/// Counters from one lock-step run, keyed by plain node ids.
struct RingRun {
    steps: usize,
    loads: HashMap<(u32, u32), u64>,
    max_concurrent_per_edge: u64,
    contention_events: u64,
    messages_delivered: u64,
    min_messages_held: usize,
    complete: bool,
}

/// Each entry of `orders` is one ring listed in travel order.
fn run_rings(orders: &[Vec<u32>]) -> RingRun {
    let steps = orders
        .iter()
        .map(|o| o.len().saturating_sub(1))
        .max()
        .unwrap_or(0);
    let mut holdings: Vec<Holdings> = orders
        .iter()
        .map(|o| {
            let mut h = Holdings::new(o.len());
            for pos in 0..o.len() {
                h.insert(pos, pos);
            }
            h
        })
        .collect();

    let mut loads: HashMap<(u32, u32), u64> = HashMap::new();
    let mut max_concurrent_per_edge = 0;
    let mut contention_events = 0;
    let mut messages_delivered = 0;
    // edge -> (first ring to use it this step, traversals this step, shared)
    let mut this_step: HashMap<(u32, u32), (usize, u64, bool)> = HashMap::new();

    for step in 1..=steps {
        this_step.clear();
        for (r, order) in orders.iter().enumerate() {
            let len = order.len();
            if step >= len {
                continue;
            }
            for pos in 0..len {
                let next = (pos + 1) % len;
                // The message forwarded at this step originated `step - 1` hops back.
                let origin = (pos + len - (step - 1)) % len;
                holdings[r].insert(next, origin);
                messages_delivered += 1;

                let (a, b) = (order[pos], order[next]);
                let key = (a.min(b), a.max(b));
                let entry = this_step.entry(key).or_insert((r, 0, false));
                entry.1 += 1;
                entry.2 |= entry.0 != r;
                max_concurrent_per_edge = max_concurrent_per_edge.max(entry.1);
                *loads.entry(key).or_insert(0) += 1;
            }
        }
        contention_events += this_step.values().filter(|e| e.2).count() as u64;
    }

    let counts = || {
        orders
            .iter()
            .zip(&holdings)
            .flat_map(|(o, h)| (0..o.len()).map(move |pos| (o.len(), h.count(pos))))
    };
    RingRun {
        steps,
        loads,
        max_concurrent_per_edge,
        contention_events,
        messages_delivered,
        min_messages_held: counts().map(|(_, c)| c).min().unwrap_or(0),
        complete: counts().all(|(len, c)| len == c),
    }
}

/// Runs all schedules together in lock step. No disjointness is assumed;
/// shared links show up as contention.
pub fn simulate_schedules(schedules: &[RingSchedule]) -> TrafficReport {
    let orders: Vec<Vec<u32>> = schedules.iter().map(RingSchedule::order).collect();
    let run = run_rings(&orders);
    let dim = schedules.first().map_or(0, |s| s.ring.dim());
    let per_edge_load = run
        .loads
        .into_iter()
        .map(|((a, b), load)| {
            let edge = Edge::from_raw(NodeLabel::from_raw(dim, a), NodeLabel::from_raw(dim, b));
            (edge, load)
        })
        .collect();
    TrafficReport {
        rings: schedules.len(),
        steps: run.steps,
        per_edge_load,
        max_concurrent_per_edge: run.max_concurrent_per_edge,
        contention_events: run.contention_events,
        messages_delivered: run.messages_delivered,
        min_messages_held: run.min_messages_held,
        complete: run.complete,
    }
}

/// All-to-all broadcast on one ring, forward direction.
pub fn simulate_ring_broadcast(ring: &Cycle) -> Result<TrafficReport> {
    let schedule = RingSchedule::new(ring.clone(), Direction::Forward, "whole")?;
    Ok(simulate_schedules(&[schedule]))
}

/// Each message is split in two halves, one per ring, and both rings run
/// concurrently. The rings must be edge-disjoint Hamiltonian cycles.
pub fn simulate_split_broadcast(first: &Cycle, second: &Cycle) -> Result<TrafficReport> {
    if !are_edge_disjoint(first, second) {
        return Err(Error::Precondition("rings share an edge".into()));
    }
    let schedules = [
        RingSchedule::new(first.clone(), Direction::Forward, "half-0")?,
        RingSchedule::new(second.clone(), Direction::Forward, "half-1")?,
    ];
    Ok(simulate_schedules(&schedules))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::edh_cycles;

    #[test]
    fn triangle_finishes_in_two_steps() {
        let run = run_rings(&[vec![0, 1, 2]]);
        assert_eq!(run.steps, 2);
        assert!(run.complete);
        assert_eq!(run.min_messages_held, 3);
        assert_eq!(run.loads.len(), 3);
        assert!(run.loads.values().all(|&l| l == 2));
    }

    #[test]
    fn ring_broadcast_dim4() {
        let pair = edh_cycles(4).unwrap();
        let report = simulate_ring_broadcast(pair.first()).unwrap();
        assert_eq!(report.steps, 15);
        assert!(report.complete);
        assert_eq!(report.min_messages_held, 16);
        assert_eq!(report.used_edges(), 16);
        assert_eq!(report.uniform_load(), Some(15));
        assert_eq!(report.max_concurrent_per_edge, 1);
        assert_eq!(report.contention_events, 0);
        assert_eq!(report.messages_delivered, 16 * 15);
    }

    #[test]
    fn backward_direction_uses_same_links() {
        let ring = edh_cycles(5).unwrap().first().clone();
        let fwd =
            simulate_schedules(
                &[RingSchedule::new(ring.clone(), Direction::Forward, "a").unwrap()],
            );
        let bwd = simulate_schedules(&[RingSchedule::new(ring, Direction::Backward, "a").unwrap()]);
        assert_eq!(fwd.per_edge_load, bwd.per_edge_load);
        assert!(bwd.complete);
    }

    #[test]
    fn split_broadcast() {
        let pair = edh_cycles(4).unwrap();
        let report = simulate_split_broadcast(pair.first(), pair.second()).unwrap();
        assert_eq!(report.contention_events, 0);
        assert_eq!(report.steps, 15);
        assert_eq!(report.used_edges(), 32);

        let pair = edh_cycles(5).unwrap();
        let report = simulate_split_broadcast(pair.first(), pair.second()).unwrap();
        assert_eq!(report.used_edges(), 64);
        assert_eq!(report.uniform_load(), Some(31));
    }

    #[test]
    fn overlapping_rings() {
        let c = edh_cycles(4).unwrap().first().clone();
        assert!(matches!(
            simulate_split_broadcast(&c, &c),
            Err(Error::Precondition(_))
        ));
        // Opposite directions on one ring meet on every link at every step.
        let report = simulate_schedules(&[
            RingSchedule::new(c.clone(), Direction::Forward, "a").unwrap(),
            RingSchedule::new(c, Direction::Backward, "b").unwrap(),
        ]);
        assert_eq!(report.contention_events, 16 * 15);
        assert_eq!(report.max_concurrent_per_edge, 2);
    }
}
