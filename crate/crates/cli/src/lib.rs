//! Command-line harness around `csp_core`: JSON input, batch sweeps and the
//! `csp` binary's subcommands.

pub mod appendix;
pub mod catalan;
pub mod commands;
pub mod error;
pub mod grid;
pub mod io;

pub use commands::{run, Outcome};
pub use error::{CliError, Result};
