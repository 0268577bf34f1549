//! Command-line front end: vertex files, JSON reports and the `fanotope`
//! subcommands.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, CliError, Command};
pub use format::{ParseError, PolytopeFile};
