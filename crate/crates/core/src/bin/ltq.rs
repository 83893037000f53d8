use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ltq::cli::{
    cmd_construct, cmd_oracle, cmd_residual, cmd_simulate, cmd_topology, cmd_verify, CliError,
    Kind, OracleMode, Output, OutputFormat, SimulateMode, EXIT_MALFORMED, EXIT_REFUSED,
};
use ltq::verify::DEFAULT_SEARCH_BUDGET;

#[derive(Parser)]
#[command(
    name = "ltq",
    version,
    about = "Locally twisted cubes and their two edge-disjoint Hamiltonian cycles"
)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edges of LTQ_n.
    Topology {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edgelist)]
        format: OutputFormat,
    },
    /// Build two edge-disjoint Hamiltonian paths or cycles.
    Construct {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum, default_value_t = Kind::Cycles)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = OutputFormat::CyclesJson)]
        format: OutputFormat,
    },
    /// Check a cycles-json document (standard input when no file is given).
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::ReportText)]
        format: OutputFormat,
    },
    /// Exhaustive Hamiltonian-cycle oracles for small cubes.
    Oracle {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum)]
        mode: OracleMode,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::ReportText)]
        format: OutputFormat,
    },
    /// Simulate all-to-all broadcast over the constructed rings.
    Simulate {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum, default_value_t = SimulateMode::Split)]
        mode: SimulateMode,
        #[arg(long, value_enum, default_value_t = OutputFormat::ReportText)]
        format: OutputFormat,
    },
    /// Edges left unused by the two cycles, and a bounded third-cycle search.
    Residual {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::ReportText)]
        format: OutputFormat,
    },
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut buf = String::new();
    let res = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| buf = s),
        _ => io::stdin().read_to_string(&mut buf).map(|_| ()),
    };
    res.map_err(|e| CliError {
        code: EXIT_MALFORMED,
        message: format!("cannot read input: {e}"),
    })?;
    Ok(buf)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Topology { dim, format } => cmd_topology(*dim, *format),
        Command::Construct { dim, kind, format } => cmd_construct(*dim, *kind, *format),
        Command::Verify { input, format } => cmd_verify(&read_input(input.as_ref())?, *format),
        Command::Oracle {
            dim,
            mode,
            limit,
            format,
        } => cmd_oracle(*dim, *mode, *limit, *format),
        Command::Simulate { dim, mode, format } => cmd_simulate(*dim, *mode, *format),
        Command::Residual {
            dim,
            budget,
            format,
        } => cmd_residual(*dim, Some(*budget), *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("ltq: {e}");
            return ExitCode::from(e.code);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &output.text),
        None => io::stdout().lock().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("ltq: cannot write output: {e}");
        return ExitCode::from(EXIT_REFUSED);
    }
    ExitCode::from(output.code)
}
