//! Command-line front end for `aqc-core`: code construction with
//! descriptor and alist output, LP feasibility checks, the twirled channel
//! model, and seeded phase-flip simulation sweeps.

pub mod commands;
pub mod error;
pub mod formats;

pub use commands::{run, Cli};
pub use error::{CliError, Result};
