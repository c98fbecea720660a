//! Command-line front end: instance generation, solving, oracle runs,
//! evaluation and benchmark sweeps. Every subcommand is deterministic given
//! its seed; records are JSON objects, one per line.

pub mod commands;
pub mod error;
pub mod gen;
pub mod instance_file;
pub mod record;

pub use commands::{run, Cli};
pub use error::{CliError, CliResult};
pub use record::ResultRecord;
