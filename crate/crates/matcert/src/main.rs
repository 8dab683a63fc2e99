use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use matcert::commands::{
    run_analyze, run_check, run_oracle, CheckOutcome, OracleRequest, DEFAULT_STEP_CAP,
};

/// Checks matrix interpretation certificates for term rewrite systems.
#[derive(Parser)]
#[command(name = "matcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a certificate against a rewrite system.
    Check {
        /// Rewrite system file.
        trs: PathBuf,
        /// Certificate file (JSON).
        cert: PathBuf,
        /// Write the verdict as JSON to this path.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Also brute-force derivations over ground terms up to this size
        /// and compare them against the certified bounds.
        #[arg(long, value_name = "N")]
        oracle: Option<usize>,
        /// Longest derivation the oracle follows before giving up.
        #[arg(long, value_name = "C", default_value_t = DEFAULT_STEP_CAP)]
        step_cap: u64,
    },
    /// Measure derivational complexity by brute force, without a certificate.
    Oracle {
        /// Rewrite system file.
        trs: PathBuf,
        /// Largest ground term size to start derivations from.
        #[arg(long, value_name = "N")]
        max_size: usize,
        /// Longest derivation to follow before giving up.
        #[arg(long, value_name = "C")]
        step_cap: u64,
        /// Fit the least constant C with dc(n) <= C * n^d and sanity-check it.
        #[arg(long, value_name = "d")]
        degree: Option<u64>,
    },
    /// Analyze a certificate's coefficient matrices without a rewrite system.
    Analyze {
        /// Certificate file (JSON).
        cert: PathBuf,
        /// Longest matrix product to measure.
        #[arg(long, value_name = "K")]
        max_len: usize,
    },
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { trs, cert, json, oracle, step_cap } => {
            let outcome = match (read_input(&trs), read_input(&cert)) {
                (Ok(trs_text), Ok(cert_text)) => {
                    let request = oracle.map(|max_size| OracleRequest { max_size, step_cap });
                    run_check(&trs_text, &cert_text, request)
                }
                (Err(e), _) | (_, Err(e)) => CheckOutcome::input_error(e),
            };
            print!("{}", outcome.report);
            if let Some(path) = json {
                if let Err(e) = fs::write(&path, outcome.verdict.to_json()) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            outcome.verdict.exit_code()
        }
        Command::Oracle { trs, max_size, step_cap, degree } => match read_input(&trs) {
            Ok(trs_text) => {
                let outcome = run_oracle(&trs_text, max_size, step_cap, degree);
                print!("{}", outcome.report);
                outcome.exit_code
            }
            Err(e) => {
                eprintln!("input error: {e}");
                2
            }
        },
        Command::Analyze { cert, max_len } => match read_input(&cert) {
            Ok(cert_text) => {
                let outcome = run_analyze(&cert_text, max_len);
                print!("{}", outcome.report);
                outcome.exit_code
            }
            Err(e) => {
                eprintln!("input error: {e}");
                2
            }
        },
    };
    ExitCode::from(code as u8)
}
