//! Structure files, suite reports and the `kcat` command line.

pub mod app;
pub mod derive;
pub mod error;
pub mod format;
pub mod run;

pub use error::{CliError, Result};
pub use format::{emit, parse, parse_str, Document, Entry, Item};
pub use run::{run_all, run_suite, Report};
