//! Checkers for Hamiltonicity and edge-disjointness, exhaustive search
//! oracles for small cubes, and analysis of the edges the two constructed
//! cycles leave unused.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::construction::{edh_cycles, expected_endpoints, Cycle, HamiltonianPair, Walk};
use crate::error::{Error, Result};
use crate::topology::{
    adjacent_values, check_dim, edges, neighbor_values, Edge, NodeLabel, MIN_DIM,
};

/// Default node-expansion budget for [`search_third_cycle`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Largest dimension enumerated exhaustively without an explicit limit.
pub const EXHAUSTIVE_MAX_DIM: u32 = 4;

/// An unvalidated node sequence, e.g. one read from a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawWalk {
    pub dim: u32,
    pub nodes: Vec<NodeLabel>,
    pub closed: bool,
}

impl Walk for RawWalk {
    fn dim(&self) -> u32 {
        self.dim
    }

    fn nodes(&self) -> &[NodeLabel] {
        &self.nodes
    }

    fn is_closed(&self) -> bool {
        self.closed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, result: std::result::Result<String, String>) {
        let (passed, detail) = match result {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check, then an overall verdict.
    pub fn render_text(&self) -> String {
        let mut out = format!("subject: {}\n", self.subject);
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict} {}: {}", c.name, c.detail);
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn length_check(dim: u32, walk: &impl Walk) -> std::result::Result<String, String> {
    let want = 1usize << dim;
    let got = walk.nodes().len();
    if got == want {
        Ok(format!("{got} nodes"))
    } else {
        Err(format!("{got} nodes, expected {want}"))
    }
}

fn distinct_check(dim: u32, walk: &impl Walk) -> std::result::Result<String, String> {
    let mut seen = HashSet::with_capacity(walk.nodes().len());
    for (i, n) in walk.nodes().iter().enumerate() {
        if n.dim() != dim {
            return Err(format!("node {i} has dimension {}", n.dim()));
        }
        if !seen.insert(n.value()) {
            return Err(format!("{n} repeats at position {i}"));
        }
    }
    Ok("all nodes distinct".into())
}

fn adjacency_check(walk: &impl Walk) -> std::result::Result<String, String> {
    for (i, w) in walk.nodes().windows(2).enumerate() {
        if w[0].dim() != w[1].dim() || !adjacent_values(w[0].value(), w[1].value()) {
            return Err(format!("step {i}: {} -> {} is not an edge", w[0], w[1]));
        }
    }
    Ok("consecutive nodes adjacent".into())
}

fn closing_check(walk: &impl Walk) -> std::result::Result<String, String> {
    let nodes = walk.nodes();
    if nodes.len() < 3 {
        return Err(format!("{} nodes cannot close a cycle", nodes.len()));
    }
    let (first, last) = (nodes[0], nodes[nodes.len() - 1]);
    if adjacent_values(first.value(), last.value()) && first.dim() == last.dim() {
        Ok(format!("{last} -> {first} closes the cycle"))
    } else {
        Err(format!("{last} -> {first} is not an edge"))
    }
}

/// Named Hamiltonicity checks for one member; `closing` is included only
/// for closed walks.
pub fn hamiltonian_checks(
    dim: u32,
    walk: &impl Walk,
) -> Vec<(&'static str, std::result::Result<String, String>)> {
    let mut out = vec![
        ("length", length_check(dim, walk)),
        ("distinct", distinct_check(dim, walk)),
        ("adjacency", adjacency_check(walk)),
    ];
    if walk.is_closed() {
        out.push(("closing", closing_check(walk)));
    }
    out
}

/// The first reason `walk` is not a Hamiltonian path (or cycle, if closed)
/// of `LTQ_dim`.
pub fn hamiltonian_violation(dim: u32, walk: &impl Walk) -> Option<String> {
    hamiltonian_checks(dim, walk)
        .into_iter()
        .find_map(|(name, r)| r.err().map(|why| format!("{name}: {why}")))
}

pub fn is_hamiltonian_path(dim: u32, nodes: &[NodeLabel]) -> bool {
    let walk = RawWalk {
        dim,
        nodes: nodes.to_vec(),
        closed: false,
    };
    hamiltonian_violation(dim, &walk).is_none()
}

pub fn is_hamiltonian_cycle(dim: u32, nodes: &[NodeLabel]) -> bool {
    let walk = RawWalk {
        dim,
        nodes: nodes.to_vec(),
        closed: true,
    };
    hamiltonian_violation(dim, &walk).is_none()
}

fn edge_key(a: NodeLabel, b: NodeLabel) -> (u32, u32) {
    (a.value().min(b.value()), a.value().max(b.value()))
}

/// Undirected edges the two walks have in common, sorted.
pub fn shared_edges(a: &impl Walk, b: &impl Walk) -> Vec<(NodeLabel, NodeLabel)> {
    let own: HashSet<(u32, u32)> = a.steps().into_iter().map(|(x, y)| edge_key(x, y)).collect();
    let mut shared: Vec<_> = b
        .steps()
        .into_iter()
        .filter(|&(x, y)| own.contains(&edge_key(x, y)))
        .map(|(x, y)| {
            if x.value() <= y.value() {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    shared.sort();
    shared.dedup();
    shared
}

/// True iff no undirected edge appears in both walks.
pub fn are_edge_disjoint(a: &impl Walk, b: &impl Walk) -> bool {
    shared_edges(a, b).is_empty()
}

/// Runs every named check on a pair of members. Paths are also checked
/// against [`expected_endpoints`].
pub fn verify_pair(dim: u32, members: &[RawWalk]) -> VerificationReport {
    let kind = match members.first() {
        Some(m) if !m.closed => "paths",
        _ => "cycles",
    };
    let mut report = VerificationReport::new(format!("LTQ_{dim} {kind}"));
    report.push(
        "dimension",
        if (4..=crate::topology::MAX_DIM).contains(&dim) {
            Ok(format!("dim {dim}"))
        } else {
            Err(format!(
                "dim {dim} outside 4..={}",
                crate::topology::MAX_DIM
            ))
        },
    );
    report.push(
        "members",
        if members.len() == 2 {
            Ok("2 members".into())
        } else {
            Err(format!("{} members, expected 2", members.len()))
        },
    );
    let names = ["first", "second"];
    let endpoints = expected_endpoints(dim).ok();
    for (name, member) in names.iter().zip(members) {
        for (check, result) in hamiltonian_checks(dim, member) {
            report.push(format!("{name}.{check}"), result);
        }
        if let (false, Some(e)) = (member.closed, endpoints) {
            let want = if *name == "first" {
                (e.start_p, e.end_p)
            } else {
                (e.start_q, e.end_q)
            };
            let got = (member.nodes.first().copied(), member.nodes.last().copied());
            report.push(
                format!("{name}.endpoints"),
                if got == (Some(want.0), Some(want.1)) {
                    Ok(format!("{} -> {}", want.0, want.1))
                } else {
                    Err(format!("expected {} -> {}", want.0, want.1))
                },
            );
        }
    }
    if let [a, b] = members {
        let shared = shared_edges(a, b);
        report.push(
            "disjoint",
            match shared.first() {
                None => Ok("no shared edges".into()),
                Some((x, y)) => Err(format!("{} shared edges, first {x} {y}", shared.len())),
            },
        );
    }
    report
}

/// Backtracking Hamiltonian-cycle search over explicit adjacency lists,
/// anchored at node 0. Neighbors are tried in ascending order; a branch is
/// cut as soon as some unvisited node keeps fewer than two usable neighbors.
struct CycleSearch<'a> {
    adj: &'a [Vec<u32>],
    visited: Vec<bool>,
    // Neighbors of each node that are not interior nodes of the current path.
    usable: Vec<u32>,
    path: Vec<u32>,
    cursor: Vec<usize>,
    expansions: u64,
}

struct SearchOutcome {
    cycles: Vec<Vec<u32>>,
    expansions: u64,
    budget_exhausted: bool,
}

impl<'a> CycleSearch<'a> {
    const ANCHOR: u32 = 0;

    fn new(adj: &'a [Vec<u32>]) -> Self {
        Self {
            adj,
            visited: vec![false; adj.len()],
            usable: adj.iter().map(|n| n.len() as u32).collect(),
            path: Vec::with_capacity(adj.len()),
            cursor: Vec::with_capacity(adj.len()),
            expansions: 0,
        }
    }

    /// Moves the head to `next`; returns false if the pruning rule fires.
    fn extend(&mut self, next: u32) -> bool {
        let head = *self
            .path
            .last()
            .expect("path is never empty while extending");
        let mut ok = true;
        if head != Self::ANCHOR {
            for &v in &self.adj[head as usize] {
                if !self.visited[v as usize] {
                    self.usable[v as usize] -= 1;
                    if v != next && self.usable[v as usize] < 2 {
                        ok = false;
                    }
                }
            }
        }
        self.visited[next as usize] = true;
        self.path.push(next);
        self.cursor.push(0);
        ok
    }

    fn retract(&mut self) {
        let last = self.path.pop().expect("retract on non-empty path");
        self.cursor.pop();
        self.visited[last as usize] = false;
        if let Some(&head) = self.path.last() {
            if head != Self::ANCHOR {
                for &v in &self.adj[head as usize] {
                    if !self.visited[v as usize] {
                        self.usable[v as usize] += 1;
                    }
                }
            }
        }
    }

    /// Emits each cycle once, in canonical orientation, in lexicographic order.
    fn run(mut self, limit: Option<usize>, budget: Option<u64>) -> SearchOutcome {
        let n = self.adj.len();
        let mut cycles = Vec::new();
        let mut budget_exhausted = false;
        if n < 3 || self.adj.iter().any(|a| a.len() < 2) {
            return SearchOutcome {
                cycles,
                expansions: 0,
                budget_exhausted,
            };
        }
        self.visited[Self::ANCHOR as usize] = true;
        self.path.push(Self::ANCHOR);
        self.cursor.push(0);

        'search: while !self.path.is_empty() {
            let depth = self.path.len() - 1;
            let head = self.path[depth];
            if self.path.len() == n {
                let closes = self.adj[head as usize].contains(&Self::ANCHOR);
                if closes && self.path[1] < head {
                    cycles.push(self.path.clone());
                    if limit.is_some_and(|l| cycles.len() >= l) {
                        break 'search;
                    }
                }
                self.retract();
                continue;
            }
            let mut advanced = false;
            while self.cursor[depth] < self.adj[head as usize].len() {
                let next = self.adj[head as usize][self.cursor[depth]];
                self.cursor[depth] += 1;
                if self.visited[next as usize] {
                    continue;
                }
                if budget.is_some_and(|b| self.expansions >= b) {
                    budget_exhausted = true;
                    break 'search;
                }
                self.expansions += 1;
                if self.extend(next) {
                    advanced = true;
                    break;
                }
                self.retract();
            }
            if !advanced {
                if depth == 0 {
                    break;
                }
                self.retract();
            }
        }
        SearchOutcome {
            cycles,
            expansions: self.expansions,
            budget_exhausted,
        }
    }
}

fn ltq_adjacency(dim: u32) -> Vec<Vec<u32>> {
    (0..1u32 << dim)
        .map(|v| {
            let mut n: Vec<u32> = neighbor_values(v, dim).collect();
            n.sort_unstable();
            n
        })
        .collect()
}

fn to_cycle(dim: u32, values: Vec<u32>) -> Cycle {
    let nodes = values
        .into_iter()
        .map(|v| NodeLabel::new(dim, v).expect("search stays inside the cube"))
        .collect();
    Cycle::new(dim, nodes).expect("search emits valid cycles")
}

/// All Hamiltonian cycles of `LTQ_dim` in canonical form and lexicographic
/// order, or the first `limit` of them. Dimensions above 4 require a limit.
pub fn enumerate_hamiltonian_cycles(dim: u32, limit: Option<usize>) -> Result<Vec<Cycle>> {
    check_dim(dim, MIN_DIM)?;
    if dim > EXHAUSTIVE_MAX_DIM && limit.is_none() {
        return Err(Error::Refused(format!(
            "exhaustive enumeration is limited to dimension {EXHAUSTIVE_MAX_DIM}; pass a limit for LTQ_{dim}"
        )));
    }
    let adj = ltq_adjacency(dim);
    let outcome = CycleSearch::new(&adj).run(limit, None);
    Ok(outcome
        .cycles
        .into_iter()
        .map(|c| to_cycle(dim, c))
        .collect())
}

/// Result of asking whether `LTQ_dim` has two edge-disjoint Hamiltonian cycles.
#[derive(Debug, Clone)]
pub struct PairExistence {
    pub dim: u32,
    pub exists: bool,
    pub min_degree: u32,
    /// True when the degree bound alone rules a pair out.
    pub excluded_by_degree: bool,
    pub cycles_enumerated: usize,
    /// Unordered pairs of enumerated cycles with no shared edge.
    pub disjoint_pairs: usize,
    pub witness: Option<HamiltonianPair<Cycle>>,
}

fn edge_mask(cycle: &Cycle, index: &BTreeMap<(u32, u32), u32>) -> u64 {
    cycle
        .steps()
        .into_iter()
        .fold(0u64, |m, (a, b)| m | 1u64 << index[&edge_key(a, b)])
}

/// Decides the question for `LTQ_3` and `LTQ_4` by exhaustive search.
/// `LTQ_3` is also settled by the degree bound: two edge-disjoint
/// Hamiltonian cycles use four edges at every node.
pub fn exists_two_edge_disjoint_hc(dim: u32) -> Result<PairExistence> {
    if !(3..=EXHAUSTIVE_MAX_DIM).contains(&dim) {
        return Err(Error::Refused(format!(
            "exhaustive pair search covers dimensions 3 and 4, not {dim}"
        )));
    }
    let min_degree = dim;
    let excluded_by_degree = min_degree < 4;

    let cycles = enumerate_hamiltonian_cycles(dim, None)?;
    let index: BTreeMap<(u32, u32), u32> = edges(dim)?
        .iter()
        .enumerate()
        .map(|(i, e)| (edge_key(e.a(), e.b()), i as u32))
        .collect();
    let masks: Vec<u64> = cycles.iter().map(|c| edge_mask(c, &index)).collect();
    let mut disjoint_pairs = 0;
    for (i, a) in masks.iter().enumerate() {
        disjoint_pairs += masks[i + 1..].iter().filter(|b| a & *b == 0).count();
    }

    let witness = if dim >= 4 {
        Some(edh_cycles(dim)?)
    } else {
        None
    };
    Ok(PairExistence {
        dim,
        exists: disjoint_pairs > 0,
        min_degree,
        excluded_by_degree,
        cycles_enumerated: cycles.len(),
        disjoint_pairs,
        witness,
    })
}

/// Outcome of a bounded search for a Hamiltonian cycle in the residual graph.
#[derive(Debug, Clone)]
pub struct ThirdCycleSearch {
    pub cycle: Option<Cycle>,
    pub expansions: u64,
    /// When false and no cycle was found, the search space was exhausted
    /// and the residual graph has no Hamiltonian cycle.
    pub budget_exhausted: bool,
}

/// Looks for a Hamiltonian cycle of `LTQ_dim` using only `residual` edges,
/// stopping after `budget` node expansions. A missing cycle with
/// `budget_exhausted` set says nothing about existence.
pub fn search_third_cycle(dim: u32, residual: &[Edge], budget: u64) -> Result<ThirdCycleSearch> {
    check_dim(dim, MIN_DIM)?;
    let mut adj = vec![Vec::new(); 1usize << dim];
    for e in residual {
        if e.a().dim() != dim || e.b().dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: e.a().dim(),
            });
        }
        adj[e.a().value() as usize].push(e.b().value());
        adj[e.b().value() as usize].push(e.a().value());
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    if budget == 0 {
        return Ok(ThirdCycleSearch {
            cycle: None,
            expansions: 0,
            budget_exhausted: true,
        });
    }
    let outcome = CycleSearch::new(&adj).run(Some(1), Some(budget));
    Ok(ThirdCycleSearch {
        cycle: outcome.cycles.into_iter().next().map(|c| to_cycle(dim, c)),
        expansions: outcome.expansions,
        budget_exhausted: outcome.budget_exhausted,
    })
}

/// Edges of `LTQ_dim` left unused by two edge-disjoint Hamiltonian cycles.
#[derive(Debug, Clone)]
pub struct ResidualAnalysis {
    pub dim: u32,
    pub unused_edges: Vec<Edge>,
    /// Residual degree -> number of nodes with that degree.
    pub degree_histogram: BTreeMap<u32, usize>,
    pub third_cycle: Option<ThirdCycleSearch>,
}

impl ResidualAnalysis {
    /// The common residual degree, if every node has the same one.
    pub fn uniform_degree(&self) -> Option<u32> {
        match self.degree_histogram.len() {
            1 => self.degree_histogram.keys().next().copied(),
            _ => None,
        }
    }
}

/// Computes the unused edges and their degree profile; when
/// `search_budget` is set, also searches them for a third Hamiltonian cycle.
pub fn residual_analysis(
    dim: u32,
    first: &impl Walk,
    second: &impl Walk,
    search_budget: Option<u64>,
) -> Result<ResidualAnalysis> {
    check_dim(dim, 4)?;
    let members = [
        (
            "first",
            first.is_closed(),
            hamiltonian_violation(dim, first),
        ),
        (
            "second",
            second.is_closed(),
            hamiltonian_violation(dim, second),
        ),
    ];
    for (name, closed, violation) in members {
        if !closed {
            return Err(Error::Precondition(format!("{name} member is not a cycle")));
        }
        if let Some(why) = violation {
            return Err(Error::Precondition(format!("{name} member: {why}")));
        }
    }
    if !are_edge_disjoint(first, second) {
        return Err(Error::Precondition("cycles share an edge".into()));
    }

    let used: HashSet<(u32, u32)> = first
        .steps()
        .into_iter()
        .chain(second.steps())
        .map(|(a, b)| edge_key(a, b))
        .collect();
    let unused_edges: Vec<Edge> = edges(dim)?
        .into_iter()
        .filter(|e| !used.contains(&edge_key(e.a(), e.b())))
        .collect();

    let mut degree = vec![0u32; 1usize << dim];
    for e in &unused_edges {
        degree[e.a().value() as usize] += 1;
        degree[e.b().value() as usize] += 1;
    }
    let mut degree_histogram = BTreeMap::new();
    for d in degree {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }

    let third_cycle = search_budget
        .map(|budget| search_third_cycle(dim, &unused_edges, budget))
        .transpose()?;
    Ok(ResidualAnalysis {
        dim,
        unused_edges,
        degree_histogram,
        third_cycle,
    })
}
