use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lightframe_cli::error::Diagnostic;
use lightframe_cli::{parse_config, run_single, run_sweep, CliError, Scale, SweepSpec};

/// Time contraction between two recoiling light plates.
#[derive(Parser, Debug)]
#[command(name = "lightframe", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one scenario and print its report (and CSV row).
    Run {
        config: PathBuf,
        /// Write the CSV to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the photon energy and boost speed around a base scenario.
    Sweep {
        config: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        eps_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        eps_max: f64,
        #[arg(long)]
        eps_steps: usize,
        /// Comma-separated boost speeds; defaults to the config's beta_u.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        beta: Vec<f64>,
        /// Space the photon energies logarithmically.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_config(path: &Path) -> Result<lightframe_cli::ScenarioConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Run { config, out } => {
            let config = read_config(&config)?;
            let run = run_single(&config)?;
            print!("{}", run.report);
            if out.is_none() {
                println!();
            }
            write_output(out.as_deref(), &run.csv_document())
        }
        Command::Sweep {
            config,
            eps_min,
            eps_max,
            eps_steps,
            beta,
            log,
            out,
        } => {
            let base = read_config(&config)?;
            let spec = SweepSpec {
                eps_min,
                eps_max,
                eps_steps,
                beta_values: if beta.is_empty() {
                    vec![base.beta_u]
                } else {
                    beta
                },
                scale: if log { Scale::Log } else { Scale::Linear },
            };
            let csv = run_sweep(&spec, &base)?;
            write_output(out.as_deref(), &csv)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", Diagnostic(&e));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
