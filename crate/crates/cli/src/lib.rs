//! Library side of the command-line driver. The binary is a thin clap
//! wrapper; everything it does is reachable from here so integration tests
//! can exercise parsing, sweeping and rendering in-process.

pub mod commands;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod sweep;

pub use commands::{cmd_eval, cmd_ptg, cmd_sweep, cmd_verify, AppError, PtgCmd, PtgState};
