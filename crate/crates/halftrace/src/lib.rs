//! String files, CSV dumps, parallel simulation, verification campaigns and
//! the `halftrace` command, on top of `halftrace-core`.

pub mod cli;
pub mod csvio;
pub mod error;
pub mod format;
pub mod parallel;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use halftrace_core;
