//! `wilf`: analyze single numerical semigroups, sweep-verify invariant
//! batteries, and export per-semigroup records.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 usage or
//! input error, 3 i/o error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wilf::tree::{CoverageFilter, Filters};
use wilf_cli::commands::{
    cmd_analyze, cmd_coverage, cmd_enumerate, cmd_verify, AnalyzeFormat, CliError, EnumerateFormat,
};

#[derive(Parser)]
#[command(name = "wilf", version, about = "Numerical semigroup analysis and batch verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the invariants and condition checklist of one semigroup.
    Analyze {
        /// Generators, comma-separated (need not be minimal).
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long, value_enum, default_value_t = AnalyzeArg::Text)]
        format: AnalyzeArg,
    },
    /// Run every invariant check over all semigroups up to a genus bound.
    Verify {
        #[arg(long)]
        max_genus: u32,
        /// Worker threads; > 1 splits the tree into disjoint subtrees.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Stream one record per semigroup up to a genus bound.
    Enumerate {
        #[arg(long)]
        max_genus: u32,
        #[arg(long, value_enum, default_value_t = EnumerateArg::Csv)]
        format: EnumerateArg,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Repeatable: multiplicity=K, m-minus-nu=K, covered, uncovered.
        #[arg(long = "filter")]
        filters: Vec<String>,
    },
    /// Count how many semigroups each sufficient condition covers.
    Coverage {
        #[arg(long)]
        max_genus: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AnalyzeArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateArg {
    Csv,
    Jsonl,
}

fn parse_filters(specs: &[String]) -> Result<Filters, String> {
    let mut filters = Filters::default();
    for spec in specs {
        match spec.split_once('=') {
            Some(("multiplicity", v)) => {
                filters.multiplicity =
                    Some(v.parse().map_err(|_| format!("bad multiplicity value `{v}`"))?);
            }
            Some(("m-minus-nu", v)) => {
                filters.m_minus_nu =
                    Some(v.parse().map_err(|_| format!("bad m-minus-nu value `{v}`"))?);
            }
            None if spec == "covered" => filters.coverage = Some(CoverageFilter::CoveredOnly),
            None if spec == "uncovered" => filters.coverage = Some(CoverageFilter::UncoveredOnly),
            _ => return Err(format!("unrecognized filter `{spec}`")),
        }
    }
    Ok(filters)
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Input(_) | CliError::Usage(_) => 2,
        CliError::Io(_) => 3,
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Analyze { gens, format } => {
            let format = match format {
                AnalyzeArg::Text => AnalyzeFormat::Text,
                AnalyzeArg::Json => AnalyzeFormat::Json,
            };
            let rendered = cmd_analyze(&gens, format)?;
            print!("{rendered}");
            if format == AnalyzeFormat::Json {
                println!();
            }
            Ok(0)
        }
        Command::Verify { max_genus, jobs } => {
            let (summary, text) = cmd_verify(max_genus, jobs.max(1))?;
            print!("{text}");
            Ok(if summary.all_passed() { 0 } else { 1 })
        }
        Command::Enumerate { max_genus, format, out, filters } => {
            let filters = parse_filters(&filters).map_err(CliError::Usage)?;
            let format = match format {
                EnumerateArg::Csv => EnumerateFormat::Csv,
                EnumerateArg::Jsonl => EnumerateFormat::Jsonl,
            };
            let rows = match out {
                Some(path) => {
                    let file = File::create(&path)?;
                    let mut writer = BufWriter::new(file);
                    cmd_enumerate(&mut writer, max_genus, format, filters)?
                }
                None => {
                    let stdout = io::stdout();
                    let mut writer = BufWriter::new(stdout.lock());
                    cmd_enumerate(&mut writer, max_genus, format, filters)?
                }
            };
            eprintln!("{rows} rows");
            Ok(0)
        }
        Command::Coverage { max_genus } => {
            let (table, text) = cmd_coverage(max_genus)?;
            print!("{text}");
            Ok(if table.uncovered_deficient == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let _ = writeln!(io::stderr(), "error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
