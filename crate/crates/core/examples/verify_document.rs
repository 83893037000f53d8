//! Round trip through the cycles-json format: construct, verify, then
//! tamper with the document and watch verification fail.
//!
//! cargo run --example verify_document -- 6

use ltq::cli::{cmd_construct, cmd_verify, CyclesDocument, Kind, OutputFormat, Tampering};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);

    let text = cmd_construct(dim, Kind::Cycles, OutputFormat::CyclesJson)?.text;
    let clean = cmd_verify(&text, OutputFormat::ReportText)?;
    print!("{}", clean.text);
    println!("exit code {}\n", clean.code);

    let doc = CyclesDocument::parse(&text)?;
    for t in Tampering::ALL {
        let out = cmd_verify(&t.apply(&doc).to_json(), OutputFormat::ReportText)?;
        let failed: Vec<&str> = out
            .text
            .lines()
            .filter(|l| l.starts_with("FAIL "))
            .collect();
        println!("{t:?}: exit {}, {}", out.code, failed.join("; "));
    }
    Ok(())
}
