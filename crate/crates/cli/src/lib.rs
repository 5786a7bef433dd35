//! Library side of the `invar` command line: config, cache, commands and
//! the verification suite.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;

pub use cache::Cache;
pub use commands::{execute, run, Command, PermAction};
pub use config::{Context, RunConfig};
pub use error::{CliError, CliResult};
pub use report::{Format, Report};
