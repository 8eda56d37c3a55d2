//! Command-line front end: closed-form spectra and Kirchhoff indices of
//! enhanced hypercubes, the built-in reference table, the verification
//! suite, asymptotic ratios, and brute-force graph reports.
//!
//! Exit codes: 0 success, 1 verification failure or runtime error,
//! 2 usage or parameter error.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use qnk::decimal::{display_default, RationalRepr};
use qnk::oracle::{build_graph, graph_report, OracleCaps};
use qnk::reference::{matches_reference, reference_value};
use qnk::verify::{run_all, VerifyConfig, VerifyReport};
use qnk::{
    adjacency_spectrum, asymptotic_sequences, kf_closed_form, laplacian_spectrum, limit_ratio,
    EnhancedParams, Error, ExactRational, Result, Spectrum, SpectrumKind,
};

#[derive(Parser)]
#[command(
    name = "qnk",
    version,
    about = "Exact spectra and Kirchhoff indices of enhanced hypercubes Q_{n,k}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form spectrum of Q_{n,k}.
    Spectrum {
        /// Hypercube dimension (n >= 2).
        #[arg(long)]
        n: u32,
        /// Complement-generator start coordinate (1 <= k <= n-1).
        #[arg(long)]
        k: u32,
        /// Print the Laplacian spectrum instead of the adjacency spectrum.
        #[arg(long, conflicts_with = "adjacency")]
        laplacian: bool,
        /// Print the adjacency spectrum (the default).
        #[arg(long)]
        adjacency: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Print the exact Kirchhoff index of Q_{n,k}.
    Kf {
        /// Hypercube dimension (n >= 2).
        #[arg(long)]
        n: u32,
        /// Complement-generator start coordinate (1 <= k <= n-1).
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Print the triangular Kirchhoff-index table for 2 <= n <= max-n.
    Table {
        /// Largest dimension to tabulate (2 <= max-n <= 64).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        max_n: u32,
        /// Check each cell against the built-in reference strings and
        /// report any mismatch (exit 1 if one fails).
        #[arg(long)]
        compare_paper: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Run the verification suite (closed forms vs oracles vs identities).
    Verify {
        /// Ceiling for the closed-form sweeps.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
        /// Raise the oracle cost caps to this dimension (slow above the
        /// default of 8 for the resistance path).
        #[arg(long)]
        max_n_oracle: Option<u32>,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt one enumerated multiplicity to demonstrate that the
        /// suite catches it (the run then fails by design).
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Print the asymptotic sandwich: lower/upper sequences and the
    /// normalized ratio at k = 1, floor(n/2), n-1.
    Asymptotics {
        /// Dimension to report (repeatable), each at least 3.
        #[arg(long = "n", required = true, value_parser = clap::value_parser!(u32).range(3..))]
        n: Vec<u32>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Build the explicit graph and report brute-force invariants
    /// (resistances, Wiener index, diameter, structural checks).
    Report {
        /// Hypercube dimension (n >= 2).
        #[arg(long)]
        n: u32,
        /// Complement-generator start coordinate (1 <= k <= n-1).
        #[arg(long)]
        k: u32,
        /// Raise the oracle cost caps to this dimension.
        #[arg(long)]
        max_n_oracle: Option<u32>,
        /// Also write the edge list ("u v" per line) to this path.
        #[arg(long)]
        edges_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(verification_failed) => std::process::exit(if verification_failed { 1 } else { 0 }),
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(exit_code(&error));
        }
    }
}

/// Parameter and usage mistakes exit 2; runtime failures exit 1.
fn exit_code(error: &Error) -> i32 {
    match error {
        Error::InvalidParams { .. }
        | Error::InvalidIncrementParams { .. }
        | Error::DimensionOutOfRange { .. }
        | Error::BitsAboveDimension { .. }
        | Error::DimensionMismatch { .. }
        | Error::InvalidGeneratingSet(_)
        | Error::WeightOutOfRange { .. }
        | Error::CapExceeded { .. } => 2,
        _ => 1,
    }
}

/// Resolves the oracle caps from the environment and an optional raise
/// from the command line, warning about the cost when the raise goes
/// beyond the resistance default.
fn resolve_caps(max_n_oracle: Option<u32>) -> OracleCaps {
    let mut caps = OracleCaps::from_env();
    if let Some(raise) = max_n_oracle {
        caps = caps.with_oracle_cap(raise);
        if raise > OracleCaps::default().resistance_n {
            eprintln!(
                "warning: oracle caps raised to n={raise}; exact resistance \
                 inversion is cubic in 2^n and may take a long time"
            );
        }
    }
    caps
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Spectrum {
            n,
            k,
            laplacian,
            adjacency: _,
            format,
        } => {
            let params = EnhancedParams::new(n, k)?;
            let kind = if laplacian {
                SpectrumKind::Laplacian
            } else {
                SpectrumKind::Adjacency
            };
            let spectrum = match kind {
                SpectrumKind::Adjacency => adjacency_spectrum(params),
                SpectrumKind::Laplacian => laplacian_spectrum(params),
            };
            print_spectrum(&spectrum, params, format)?;
            Ok(false)
        }
        Command::Kf { n, k, format } => {
            let params = EnhancedParams::new(n, k)?;
            let value = kf_closed_form(params);
            print_kf(params, &value, format)?;
            Ok(false)
        }
        Command::Table {
            max_n,
            compare_paper,
            format,
        } => print_table(max_n, compare_paper, format),
        Command::Verify {
            max_n,
            max_n_oracle,
            seed,
            inject_fault,
            format,
        } => {
            let config = VerifyConfig {
                max_n_closed: max_n,
                caps: resolve_caps(max_n_oracle),
                seed,
                inject_fault,
                ..VerifyConfig::default()
            };
            let report = run_all(&config);
            print_verify(&report, format)?;
            Ok(!report.passed)
        }
        Command::Asymptotics { n, format } => {
            print_asymptotics(&n, format)?;
            Ok(false)
        }
        Command::Report {
            n,
            k,
            max_n_oracle,
            edges_out,
            format,
        } => {
            let params = EnhancedParams::new(n, k)?;
            let caps = resolve_caps(max_n_oracle);
            let report = graph_report(params, &caps)?;
            if let Some(path) = edges_out {
                let graph = build_graph(params, &caps)?;
                let mut writer = BufWriter::new(File::create(&path)?);
                graph.write_edge_list(&mut writer)?;
                writer.flush()?;
                eprintln!("edge list written to {}", path.display());
            }
            print_report(&report, format)?;
            Ok(false)
        }
    }
}

fn rational_human(value: &ExactRational) -> String {
    format!(
        "{}/{} ({})",
        value.numer(),
        value.denom(),
        display_default(value)
    )
}

fn print_spectrum(spectrum: &Spectrum, params: EnhancedParams, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Human => {
            println!(
                "{} spectrum of Q_{{{},{}}} ({} vertices)",
                spectrum.kind(),
                params.n(),
                params.k(),
                spectrum.vertex_count()
            );
            // Adjacency reads naturally top-down (largest first); the
            // Laplacian convention lists 0 first, so flip for display.
            let rows: Vec<&(i64, num_bigint::BigUint)> = match spectrum.kind() {
                SpectrumKind::Adjacency => spectrum.entries().iter().collect(),
                SpectrumKind::Laplacian => spectrum.entries().iter().rev().collect(),
            };
            println!("{:>6}  multiplicity", "value");
            for (value, mult) in rows {
                println!("{value:>6}  {mult}");
            }
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(spectrum)?),
        OutputFormat::Csv => print!("{}", spectrum.to_csv()),
    }
    Ok(())
}

#[derive(Serialize)]
struct KfRecord {
    n: u32,
    k: u32,
    kf: RationalRepr,
}

fn print_kf(params: EnhancedParams, value: &ExactRational, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Human => println!("{}", rational_human(value)),
        OutputFormat::Json => {
            let record = KfRecord {
                n: params.n(),
                k: params.k(),
                kf: RationalRepr::from(value),
            };
            println!("{}", serde_json::to_string_pretty(&record)?);
        }
        OutputFormat::Csv => {
            let repr = RationalRepr::from(value);
            println!("n,k,num,den,decimal");
            println!(
                "{},{},{},{},{}",
                params.n(),
                params.k(),
                repr.num,
                repr.den,
                repr.decimal
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableCell {
    n: u32,
    k: u32,
    kf: RationalRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

fn print_table(max_n: u32, compare: bool, format: OutputFormat) -> Result<bool> {
    let coordinates: Vec<(u32, u32)> = (2..=max_n)
        .flat_map(|n| (1..=n - 1).map(move |k| (n, k)))
        .collect();
    let cells: Vec<TableCell> = coordinates
        .into_par_iter()
        .map(|(n, k)| {
            let value = kf_closed_form(EnhancedParams::new(n, k).expect("in range"));
            let reference = if compare {
                reference_value(n, k).map(str::to_string)
            } else {
                None
            };
            let matches = reference.as_deref().map(|r| matches_reference(&value, r));
            TableCell {
                n,
                k,
                kf: RationalRepr::from(&value),
                reference,
                matches,
            }
        })
        .collect();
    let mismatches: Vec<&TableCell> = cells
        .iter()
        .filter(|cell| cell.matches == Some(false))
        .collect();

    match format {
        OutputFormat::Human => {
            if compare {
                let mut compared = 0usize;
                for cell in &cells {
                    let status = match (&cell.reference, cell.matches) {
                        (Some(reference), Some(verdict)) => {
                            compared += 1;
                            format!(
                                "reference {reference} {}",
                                if verdict { "ok" } else { "MISMATCH" }
                            )
                        }
                        _ => "no reference".to_string(),
                    };
                    println!(
                        "n={} k={}: {}/{} = {}  {status}",
                        cell.n, cell.k, cell.kf.num, cell.kf.den, cell.kf.decimal
                    );
                }
                println!(
                    "{compared} cells compared, {} mismatch(es)",
                    mismatches.len()
                );
            } else {
                let mut row_start = 0usize;
                for n in 2..=max_n {
                    let width = (n - 1) as usize;
                    let row: Vec<String> = cells[row_start..row_start + width]
                        .iter()
                        .map(|cell| cell.kf.decimal.clone())
                        .collect();
                    println!("n={n}: {}", row.join(", "));
                    row_start += width;
                }
            }
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&cells)?),
        OutputFormat::Csv => {
            if compare {
                println!("n,k,num,den,decimal,reference,matches");
                for cell in &cells {
                    println!(
                        "{},{},{},{},{},{},{}",
                        cell.n,
                        cell.k,
                        cell.kf.num,
                        cell.kf.den,
                        cell.kf.decimal,
                        cell.reference.as_deref().unwrap_or(""),
                        cell.matches.map_or(String::new(), |m| m.to_string())
                    );
                }
            } else {
                println!("n,k,num,den,decimal");
                for cell in &cells {
                    println!(
                        "{},{},{},{},{}",
                        cell.n, cell.k, cell.kf.num, cell.kf.den, cell.kf.decimal
                    );
                }
            }
        }
    }
    Ok(!mismatches.is_empty())
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn print_verify(report: &VerifyReport, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Human => {
            for check in &report.checks {
                if check.passed {
                    println!("PASS  {}  ({} instances)", check.name, check.instances);
                } else {
                    println!(
                        "FAIL  {}  ({} instances): {}",
                        check.name, check.instances, check.detail
                    );
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!(
                "{} checks, {} failed (seed {})",
                report.checks.len(),
                failed,
                report.seed
            );
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(report)?),
        OutputFormat::Csv => {
            println!("name,instances,passed,detail");
            for check in &report.checks {
                println!(
                    "{},{},{},{}",
                    check.name,
                    check.instances,
                    check.passed,
                    csv_quote(&check.detail)
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RatioCell {
    k: u32,
    ratio: RationalRepr,
}

#[derive(Serialize)]
struct AsymptoticsRow {
    n: u32,
    lower: RationalRepr,
    upper: RationalRepr,
    ratios: Vec<RatioCell>,
}

fn print_asymptotics(dimensions: &[u32], format: OutputFormat) -> Result<()> {
    let rows: Vec<AsymptoticsRow> = dimensions
        .iter()
        .map(|&n| {
            let (lower, upper) = asymptotic_sequences(n);
            let ks: BTreeSet<u32> = [1, n / 2, n - 1].into_iter().collect();
            let ratios = ks
                .into_iter()
                .map(|k| RatioCell {
                    k,
                    ratio: RationalRepr::from(&limit_ratio(
                        EnhancedParams::new(n, k).expect("n >= 3 admits these k"),
                    )),
                })
                .collect();
            AsymptoticsRow {
                n,
                lower: RationalRepr::from(&lower),
                upper: RationalRepr::from(&upper),
                ratios,
            }
        })
        .collect();

    match format {
        OutputFormat::Human => {
            for row in &rows {
                println!(
                    "n={}: lower {}  upper {}",
                    row.n, row.lower.decimal, row.upper.decimal
                );
                for cell in &row.ratios {
                    println!("  k={}: ratio {}", cell.k, cell.ratio.decimal);
                }
            }
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        OutputFormat::Csv => {
            println!("n,quantity,k,num,den,decimal");
            for row in &rows {
                println!(
                    "{},lower,,{},{},{}",
                    row.n, row.lower.num, row.lower.den, row.lower.decimal
                );
                println!(
                    "{},upper,,{},{},{}",
                    row.n, row.upper.num, row.upper.den, row.upper.decimal
                );
                for cell in &row.ratios {
                    println!(
                        "{},ratio,{},{},{},{}",
                        row.n, cell.k, cell.ratio.num, cell.ratio.den, cell.ratio.decimal
                    );
                }
            }
        }
    }
    Ok(())
}

fn print_report(report: &qnk::ResistanceReport, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Human => {
            println!(
                "Q_{{{},{}}}: {} vertices, {} edges",
                report.n, report.k, report.vertex_count, report.edge_count
            );
            println!("kirchhoff index  {}", rational_human(&report.kf));
            println!("wiener index     {}", report.wiener);
            println!("diameter         {}", report.diameter);
            println!("bipartite        {}", report.bipartite);
            println!(
                "degree check     {}",
                if report.degree_ok { "ok" } else { "FAILED" }
            );
            println!(
                "trace check      {}",
                if report.trace_ok { "ok" } else { "FAILED" }
            );
            println!(
                "trace^2 check    {}",
                if report.trace2_ok { "ok" } else { "FAILED" }
            );
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(report)?),
        OutputFormat::Csv => {
            println!("field,value");
            println!("n,{}", report.n);
            println!("k,{}", report.k);
            println!("vertex_count,{}", report.vertex_count);
            println!("edge_count,{}", report.edge_count);
            println!("kf_num,{}", report.kf.numer());
            println!("kf_den,{}", report.kf.denom());
            println!("kf_decimal,{}", display_default(&report.kf));
            println!("wiener,{}", report.wiener);
            println!("diameter,{}", report.diameter);
            println!("bipartite,{}", report.bipartite);
            println!("degree_ok,{}", report.degree_ok);
            println!("trace_ok,{}", report.trace_ok);
            println!("trace2_ok,{}", report.trace2_ok);
        }
    }
    Ok(())
}
