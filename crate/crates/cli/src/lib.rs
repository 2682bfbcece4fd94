//! Command-line front end: `iterate`, `figure`, `simulate` and `verify`.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

pub use config::{Cli, Command, Format, Mode, RunConfig};
pub use error::CliError;
pub use output::{Output, Table, VerifyReport};
