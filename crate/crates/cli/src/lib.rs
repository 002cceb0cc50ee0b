//! File format and commands behind the `threetypes` binary.

pub mod commands;
pub mod error;
pub mod format;

pub use error::{CliError, CliResult};
pub use format::{load, parse_file, serialize, to_json, Structure, StructureFile};
