//! Configuration parsing, single runs and parameter sweeps for the
//! `lightframe` command-line tool.

pub mod config;
pub mod error;
pub mod run;

pub use config::{
    parse_config, parse_config_with_warnings, Mode, PhotonEnergy, ScenarioConfig, ScenarioInputs,
};
pub use error::CliError;
pub use run::{csv_header, format_number, run_single, run_sweep, Scale, SingleRun, SweepSpec};
