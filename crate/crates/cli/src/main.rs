//! `zetacode`: weight enumerators, zeta polynomials and AG codes from the
//! command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetacode::linear_code::DEFAULT_BUDGET;
use zetacode::zeta::DEFAULT_TOLERANCE;
use zetacode::Error;

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "zetacode",
    version,
    about = "Weight enumerators, zeta polynomials and AG codes over small finite fields"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Maximum number of codewords (or divisors) to enumerate
    #[arg(long, global = true, env = "ZETACODE_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Tolerance for | |T|·√q − 1 | in Riemann hypothesis verdicts
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("tolerance must be a positive number, got `{s}`")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight distribution, dimension, minimum distance and genus of a code
    Wdist { matrix: PathBuf },
    /// Dual code and its distribution, checked against the MacWilliams transform
    Dual { matrix: PathBuf },
    /// Zeta polynomial by both algorithms, functional equation and RH verdict
    Zeta { matrix: PathBuf },
    /// Riemann hypothesis verdict for a code or a virtual enumerator
    Rh {
        input: PathBuf,
        /// Read the input as an enumerator file over GF(q) instead of a matrix
        #[arg(long)]
        q: Option<u64>,
    },
    /// Divisibility type, extremality and formal-enumerator checks
    Classify {
        enumerator: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Closed-form MDS weight enumerator
    Mds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
    },
    /// Generalized Reed-Solomon code
    Grs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        /// Use the first n field elements as evaluation points (default q)
        #[arg(long)]
        n: Option<usize>,
        /// Explicit evaluation points, comma separated
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        alphas: Option<Vec<u32>>,
        /// Column multipliers, comma separated (default all 1)
        #[arg(long, value_delimiter = ',')]
        multipliers: Option<Vec<u32>>,
    },
    /// One-point code C_L(D, kO) on an elliptic curve, D = all affine points
    Elliptic {
        curve: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// L-polynomial of a curve from its point counts N_1..N_g
    CurveZeta {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: usize,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        counts: Vec<u64>,
    },
}

fn run(cli: &Cli) -> zetacode::Result<Report> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Wdist { matrix } => commands::wdist(cfg, matrix),
        Command::Dual { matrix } => commands::dual(cfg, matrix),
        Command::Zeta { matrix } => commands::zeta(cfg, matrix),
        Command::Rh { input, q } => commands::rh(cfg, input, *q),
        Command::Classify { enumerator, q } => commands::classify(cfg, enumerator, *q),
        Command::Mds { n, d, q } => commands::mds(*n, *d, *q),
        Command::Grs {
            q,
            k,
            n,
            alphas,
            multipliers,
        } => commands::grs(cfg, *q, *k, *n, alphas.as_deref(), multipliers.as_deref()),
        Command::Elliptic { curve, k } => commands::elliptic(cfg, curve, *k),
        Command::CurveZeta { q, g, counts } => commands::curve_zeta(cfg, *q, *g, counts),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    for notice in report.notices() {
        eprintln!("notice: {notice}");
    }
    let text = report.render(cli.config.format);
    let written = match &cli.config.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    let failed = report.failed_checks();
    if !failed.is_empty() {
        eprintln!("error: identity check failed: {}", failed.join(", "));
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
