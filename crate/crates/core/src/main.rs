use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dualq::cli::{self, Document, Report, EXIT_USAGE};
use dualq::verify::{tol::UNIT_TOL, DEFAULT_CASES, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "dualq", version, about = "Dual quaternion magnitudes, norms and algebraic self-checks")]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Tolerance for the unit and orthonormality checks.
    #[arg(long, global = true, default_value_t = UNIT_TOL)]
    tol: f64,

    /// Seed for `selfcheck`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Random cases per suite for `selfcheck`.
    #[arg(long, global = true, default_value_t = DEFAULT_CASES)]
    cases: usize,

    /// Treat standard parts with norm at most this value as exactly zero.
    #[arg(long, global = true, default_value_t = 0.0)]
    zero_tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Magnitude of a dual quaternion, with the square-root cross-check.
    Magnitude { input: PathBuf },
    /// 1-, ∞- and 2-norms of a dual quaternion vector.
    Norms { input: PathBuf },
    /// Unit test for a dual quaternion or a dual quaternion vector.
    CheckUnit { input: PathBuf },
    /// Orthonormality test for a basis.
    CheckOrthonormal { input: PathBuf },
    /// Runs the randomized property suites.
    Selfcheck,
}

fn read_document(path: &PathBuf, zero_tol: f64) -> Result<Document, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    let doc = cli::parse_document(&text).map_err(|e| format!("{}:{e}", path.display()))?;
    cli::snap_document(&doc, zero_tol).map_err(|e| e.to_string())
}

fn run(args: &Args) -> Result<Report, String> {
    let load = |p: &PathBuf| read_document(p, args.zero_tol);
    let report = match &args.command {
        Command::Magnitude { input } => cli::cmd_magnitude(&load(input)?),
        Command::Norms { input } => cli::cmd_norms(&load(input)?),
        Command::CheckUnit { input } => cli::cmd_check_unit(&load(input)?, args.tol),
        Command::CheckOrthonormal { input } => cli::cmd_check_orthonormal(&load(input)?, args.tol),
        Command::Selfcheck => cli::cmd_selfcheck(args.seed, args.cases),
    };
    report.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(report) => {
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json_string()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
