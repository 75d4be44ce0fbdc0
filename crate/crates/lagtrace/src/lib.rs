//! File formats, builtin fixtures, JSON documents and verification suites
//! for the `lagtrace` command-line tool.

pub mod autfile;
pub mod builtin;
pub mod error;
pub mod json;
pub mod suites;

pub use error::{CliError, CliResult};
