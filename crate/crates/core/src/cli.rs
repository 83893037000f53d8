//! Command implementations behind the `ltq` binary. Each command renders
//! to a string so it can be driven from tests without a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 refused request,
//! 3 malformed input.

use std::fmt::{self, Write as _};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::broadcast::{simulate_ring_broadcast, simulate_split_broadcast, TrafficReport};
use crate::construction::{edh_cycles, edh_paths, Walk};
use crate::error::Error;
use crate::topology::{adjacent_values, edges, NodeLabel, MAX_DIM, MIN_DIM};
use crate::verify::{
    enumerate_hamiltonian_cycles, exists_two_edge_disjoint_hc, residual_analysis, verify_pair,
    RawWalk, VerificationReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_REFUSED: u8 = 2;
pub const EXIT_MALFORMED: u8 = 3;

/// Current `cycles-json` schema version.
pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn refused(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_REFUSED,
            message: message.into(),
        }
    }

    fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_MALFORMED,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) => EXIT_VERIFY_FAILED,
            Error::Format { .. } => EXIT_MALFORMED,
            _ => EXIT_REFUSED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered output plus the exit code the process should return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Edgelist,
    Dot,
    CyclesJson,
    ReportText,
    ReportJson,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        f.write_str(&name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Paths,
    Cycles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    Enumerate,
    PairExistence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SimulateMode {
    Single,
    Split,
}

fn unsupported(command: &str, format: OutputFormat) -> CliError {
    CliError::refused(format!("{command} does not support --format {format}"))
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// The `cycles-json` document: two node-label sequences of one dimension.
/// The `cycles` field holds both members for either kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclesDocument {
    pub version: u32,
    pub dim: u32,
    pub kind: Kind,
    pub cycles: Vec<Vec<String>>,
}

impl CyclesDocument {
    pub fn from_members<W: Walk>(dim: u32, kind: Kind, members: [&W; 2]) -> Self {
        Self {
            version: DOCUMENT_VERSION,
            dim,
            kind,
            cycles: members
                .iter()
                .map(|m| m.nodes().iter().map(NodeLabel::to_string).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        pretty(self)
    }

    pub fn parse(input: &str) -> Result<Self, CliError> {
        let doc: Self = serde_json::from_str(input)
            .map_err(|e| CliError::malformed(format!("malformed document: {e}")))?;
        if doc.version != DOCUMENT_VERSION {
            return Err(CliError::malformed(format!(
                "unsupported document version {}",
                doc.version
            )));
        }
        if !(MIN_DIM..=MAX_DIM).contains(&doc.dim) {
            return Err(CliError::malformed(format!(
                "dim {} outside {MIN_DIM}..={MAX_DIM}",
                doc.dim
            )));
        }
        Ok(doc)
    }

    /// Parses every label; any bad label makes the document malformed.
    pub fn walks(&self) -> Result<Vec<RawWalk>, CliError> {
        self.cycles
            .iter()
            .map(|member| {
                let nodes = member
                    .iter()
                    .map(|s| NodeLabel::from_bits(self.dim, s))
                    .collect::<crate::Result<Vec<_>>>()
                    .map_err(|e| CliError::malformed(e.to_string()))?;
                Ok(RawWalk {
                    dim: self.dim,
                    nodes,
                    closed: self.kind == Kind::Cycles,
                })
            })
            .collect()
    }
}

/// Ways of corrupting a valid document, each of which verification must
/// catch. All of them act on the first member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tampering {
    /// Swap the second node with the middle one.
    SwapInterior,
    /// Remove the middle node.
    DropNode,
    /// Overwrite the middle node with a copy of the second.
    DuplicateNode,
    /// Reverse a tail so the last node is no longer adjacent to the first.
    BreakClosingEdge,
}

impl Tampering {
    pub const ALL: [Tampering; 4] = [
        Tampering::SwapInterior,
        Tampering::DropNode,
        Tampering::DuplicateNode,
        Tampering::BreakClosingEdge,
    ];

    pub fn apply(self, doc: &CyclesDocument) -> CyclesDocument {
        let mut out = doc.clone();
        let Some(member) = out.cycles.first_mut().filter(|m| m.len() >= 3) else {
            return out;
        };
        let mid = member.len() / 2;
        match self {
            Tampering::SwapInterior => member.swap(1, mid),
            Tampering::DropNode => {
                member.remove(mid);
            }
            Tampering::DuplicateNode => member[mid] = member[1].clone(),
            Tampering::BreakClosingEdge => {
                let value = |s: &str| u32::from_str_radix(s, 2).unwrap_or(0);
                let head = value(&member[0]);
                if let Some(k) =
                    (2..member.len()).find(|&k| !adjacent_values(head, value(&member[k])))
                {
                    member[k..].reverse();
                }
            }
        }
        out
    }
}

/// Renders `LTQ_dim` as an edge list or DOT graph.
pub fn cmd_topology(dim: u32, format: OutputFormat) -> Result<Output, CliError> {
    let all = edges(dim)?;
    let mut out = String::new();
    match format {
        OutputFormat::Edgelist => {
            for e in &all {
                let _ = writeln!(out, "{} {}", e.a(), e.b());
            }
        }
        OutputFormat::Dot => {
            let _ = writeln!(out, "graph LTQ_{dim} {{");
            for v in 0..1u32 << dim {
                let _ = writeln!(out, "  \"{}\";", NodeLabel::new(dim, v)?);
            }
            for e in &all {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", e.a(), e.b());
            }
            out.push_str("}\n");
        }
        other => return Err(unsupported("topology", other)),
    }
    Ok(Output::ok(out))
}

fn refuse_below_four(dim: u32) -> Result<(), CliError> {
    if dim < 4 {
        return Err(CliError::refused(format!(
            "LTQ_{dim} has no two edge-disjoint Hamiltonian cycles (every node has degree {dim} < 4); dimension must be at least 4"
        )));
    }
    Ok(())
}

fn construct_document(dim: u32, kind: Kind) -> Result<CyclesDocument, CliError> {
    refuse_below_four(dim)?;
    Ok(match kind {
        Kind::Paths => {
            let pair = edh_paths(dim)?;
            CyclesDocument::from_members(dim, kind, pair.members())
        }
        Kind::Cycles => {
            let pair = edh_cycles(dim)?;
            CyclesDocument::from_members(dim, kind, pair.members())
        }
    })
}

/// Builds the two edge-disjoint Hamiltonian paths or cycles.
pub fn cmd_construct(dim: u32, kind: Kind, format: OutputFormat) -> Result<Output, CliError> {
    let doc = construct_document(dim, kind)?;
    let text = match format {
        OutputFormat::CyclesJson => doc.to_json(),
        OutputFormat::ReportText => {
            let mut out = String::new();
            for member in &doc.cycles {
                let _ = writeln!(out, "{}", member.join(" "));
            }
            out
        }
        OutputFormat::Dot => {
            let mut out = format!("graph LTQ_{dim}_{kind:?} {{\n").to_lowercase();
            for (member, color) in doc.cycles.iter().zip(["red", "blue"]) {
                let mut steps: Vec<(&String, &String)> =
                    member.windows(2).map(|w| (&w[0], &w[1])).collect();
                if kind == Kind::Cycles {
                    steps.push((&member[member.len() - 1], &member[0]));
                }
                for (a, b) in steps {
                    let _ = writeln!(out, "  \"{a}\" -- \"{b}\" [color={color}];");
                }
            }
            out.push_str("}\n");
            out
        }
        other => return Err(unsupported("construct", other)),
    };
    Ok(Output::ok(text))
}

/// Verifies a `cycles-json` document. Exit code 0 iff every check passes.
pub fn cmd_verify(input: &str, format: OutputFormat) -> Result<Output, CliError> {
    let doc = CyclesDocument::parse(input)?;
    let report: VerificationReport = verify_pair(doc.dim, &doc.walks()?);
    let text = match format {
        OutputFormat::ReportText => report.render_text(),
        OutputFormat::ReportJson => pretty(&report),
        other => return Err(unsupported("verify", other)),
    };
    Ok(Output {
        text,
        code: if report.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    })
}

fn bits(walk: &impl Walk) -> Vec<String> {
    walk.nodes().iter().map(NodeLabel::to_string).collect()
}

/// Exhaustive oracles: cycle enumeration and the two-disjoint-cycles question.
pub fn cmd_oracle(
    dim: u32,
    mode: OracleMode,
    limit: Option<usize>,
    format: OutputFormat,
) -> Result<Output, CliError> {
    if !matches!(format, OutputFormat::ReportText | OutputFormat::ReportJson) {
        return Err(unsupported("oracle", format));
    }
    let json = format == OutputFormat::ReportJson;
    let text = match mode {
        OracleMode::Enumerate => {
            let cycles = enumerate_hamiltonian_cycles(dim, limit)?;
            if json {
                pretty(&json!({
                    "dim": dim,
                    "mode": "enumerate",
                    "limit": limit,
                    "count": cycles.len(),
                    "cycles": cycles.iter().map(bits).collect::<Vec<_>>(),
                }))
            } else {
                let mut out = format!("{}\n", cycles.len());
                for c in &cycles {
                    let _ = writeln!(out, "{}", bits(c).join(" "));
                }
                out
            }
        }
        OracleMode::PairExistence => {
            let answer = exists_two_edge_disjoint_hc(dim)?;
            let degree_note = if answer.excluded_by_degree {
                format!(
                    "degree argument: every node has degree {} < 4, so two edge-disjoint Hamiltonian cycles are impossible",
                    answer.min_degree
                )
            } else {
                format!(
                    "degree argument: degree {} >= 4, inconclusive",
                    answer.min_degree
                )
            };
            let search_note = format!(
                "exhaustive search: {} Hamiltonian cycles, {} edge-disjoint pairs",
                answer.cycles_enumerated, answer.disjoint_pairs
            );
            let witness: Option<Vec<Vec<String>>> = answer
                .witness
                .as_ref()
                .map(|w| w.members().iter().map(|c| bits(*c)).collect());
            if json {
                pretty(&json!({
                    "dim": dim,
                    "mode": "pair-existence",
                    "exists": answer.exists,
                    "excluded_by_degree": answer.excluded_by_degree,
                    "cycles_enumerated": answer.cycles_enumerated,
                    "disjoint_pairs": answer.disjoint_pairs,
                    "witness": witness,
                }))
            } else {
                let mut out = format!("{}\n{degree_note}\n{search_note}\n", answer.exists);
                if let Some(w) = witness {
                    out.push_str("witness:\n");
                    for c in w {
                        let _ = writeln!(out, "{}", c.join(" "));
                    }
                }
                out
            }
        }
    };
    Ok(Output::ok(text))
}

fn traffic_text(dim: u32, mode: &str, r: &TrafficReport) -> String {
    let total = dim as usize * (1usize << (dim - 1));
    let load = match r.uniform_load() {
        Some(l) => format!("uniform {l}"),
        None => "non-uniform".into(),
    };
    format!(
        "dim: {dim}\nmode: {mode}\nrings: {}\nsteps: {}\ncontention_events: {}\nmax_concurrent_per_edge: {}\nused_edges: {} of {total}\nedge_load: {load}\nmessages_delivered: {}\ncomplete: {}\n",
        r.rings,
        r.steps,
        r.contention_events,
        r.max_concurrent_per_edge,
        r.used_edges(),
        r.messages_delivered,
        r.complete,
    )
}

/// Builds and verifies the cycles, then simulates all-to-all broadcast on
/// the first ring alone or split across both.
pub fn cmd_simulate(
    dim: u32,
    mode: SimulateMode,
    format: OutputFormat,
) -> Result<Output, CliError> {
    refuse_below_four(dim)?;
    let pair = edh_cycles(dim)?;
    let (report, name) = match mode {
        SimulateMode::Single => (simulate_ring_broadcast(pair.first())?, "single"),
        SimulateMode::Split => (
            simulate_split_broadcast(pair.first(), pair.second())?,
            "split",
        ),
    };
    let text = match format {
        OutputFormat::ReportText => traffic_text(dim, name, &report),
        OutputFormat::ReportJson => pretty(&json!({
            "dim": dim,
            "mode": name,
            "report": report,
        })),
        other => return Err(unsupported("simulate", other)),
    };
    Ok(Output::ok(text))
}

/// Unused-edge analysis of the constructed cycles, optionally followed by a
/// bounded search for a third edge-disjoint Hamiltonian cycle.
pub fn cmd_residual(
    dim: u32,
    budget: Option<u64>,
    format: OutputFormat,
) -> Result<Output, CliError> {
    refuse_below_four(dim)?;
    let pair = edh_cycles(dim)?;
    let analysis = residual_analysis(dim, pair.first(), pair.second(), budget)?;
    let search = analysis.third_cycle.as_ref().map(|s| {
        let outcome = match (&s.cycle, s.budget_exhausted) {
            (Some(_), _) => "found",
            (None, true) => "budget exhausted",
            (None, false) => "residual graph has none (search complete)",
        };
        (outcome, s)
    });
    let text = match format {
        OutputFormat::ReportText => {
            let mut out = format!(
                "dim: {dim}\nunused_edges: {}\n",
                analysis.unused_edges.len()
            );
            for (degree, count) in &analysis.degree_histogram {
                let _ = writeln!(out, "residual_degree {degree}: {count} nodes");
            }
            if let Some((outcome, s)) = search {
                let _ = writeln!(
                    out,
                    "third_cycle: {outcome} after {} expansions",
                    s.expansions
                );
                if let Some(c) = &s.cycle {
                    let _ = writeln!(out, "{}", bits(c).join(" "));
                }
            }
            out
        }
        OutputFormat::ReportJson => pretty(&json!({
            "dim": dim,
            "unused_edges": analysis.unused_edges,
            "degree_histogram": analysis.degree_histogram,
            "third_cycle": search.map(|(outcome, s)| json!({
                "outcome": outcome,
                "expansions": s.expansions,
                "cycle": s.cycle.as_ref().map(bits),
            })),
        })),
        other => return Err(unsupported("residual", other)),
    };
    Ok(Output::ok(text))
}
