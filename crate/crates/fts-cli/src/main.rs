use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fts_cli::commands::{self, Format};
use fts_cli::pq::{parse_pq, summary, PqInput};
use fts_cli::suites::{exit_code, run_suite, to_json_lines, Options, Suite};
use fts_cli::CliError;
use fts_core::FtsError;

#[derive(Parser)]
#[command(name = "fts", about = "Freudenthal triple systems, key varieties and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the system of a P/Q pair and print its invariants.
    Build {
        #[arg(long)]
        pq: PathBuf,
    },
    /// Run a check suite and write a JSON Lines report.
    Check {
        /// axioms | identities | variety:<id> | charts | actions | fibers | weights | equivalences | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Degree bound for bounded membership checks
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        pq: Option<PathBuf>,
        /// Report file; stdout when absent
        #[arg(long)]
        json: Option<PathBuf>,
        /// Exit 3 when some check is inconclusive
        #[arg(long)]
        strict: bool,
        /// Record wall-clock durations (makes the report non-reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Write the equations of a variety.
    Emit {
        #[arg(long)]
        variety: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Same as `emit --variety <id>`.
    Variety {
        id: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the weight constraints of a variety.
    Weights {
        id: String,
        /// JSON object of variable weights to check
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Other(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_pq(path: &PathBuf) -> Result<PqInput, CliError> {
    parse_pq(&read(path)?)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Build { pq } => {
            let input = load_pq(&pq)?;
            let sys = input.build().map_err(|e| match e {
                FtsError::DegenerateTrace { .. } => CliError::Degenerate(e.to_string()),
                other => CliError::Other(other.to_string()),
            })?;
            print!("{}", summary(&sys));
            Ok(0)
        }
        Command::Check { suite, seed, bound, pq, json, strict, timings } => {
            let suite: Suite = suite.parse()?;
            let pq = pq.as_ref().map(load_pq).transpose()?;
            let opts = Options { seed, bound, pq, timings };
            let reports = run_suite(suite, &opts);
            write_out(json.as_ref(), &to_json_lines(&reports))?;
            let failed = reports.iter().filter(|r| r.status == fts_core::Status::Fail).count();
            let open = reports.iter().filter(|r| r.status == fts_core::Status::Inconclusive).count();
            eprintln!("{} checks: {} passed, {failed} failed, {open} inconclusive", reports.len(), reports.len() - failed - open);
            Ok(exit_code(&reports, strict))
        }
        Command::Emit { variety, format, out } | Command::Variety { id: variety, format, out } => {
            let id = commands::parse_variety(&variety)?;
            let format: Format = format.parse()?;
            write_out(out.as_ref(), &commands::emit(id, format)?)?;
            Ok(0)
        }
        Command::Weights { id, table } => {
            let id = commands::parse_variety(&id)?;
            let table = table.as_ref().map(read).transpose()?;
            print!("{}", commands::weights(id, table.as_deref())?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("FTS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
