//! Command implementations behind the `gibnet` binary, exposed as a library
//! so integration tests can drive full pipeline runs in-process.

pub mod artifacts;
pub mod commands;
pub mod config;
pub mod error;

pub use config::RunConfig;
pub use error::CliError;
