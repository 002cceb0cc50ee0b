use thiserror::Error;

/// Failures of a CLI command. [`CliError::exit_code`] gives the stable code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },
    #[error("unknown demo '{name}'; available: {}", available.join(", "))]
    UnknownDemo {
        name: String,
        available: Vec<&'static str>,
    },
    #[error("unsupported conversion from {from} to {to}")]
    UnsupportedConversion { from: String, to: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] threetypes_core::Error),
}

impl CliError {
    pub fn parse(locus: impl Into<String>, message: impl ToString) -> CliError {
        CliError::Parse {
            locus: locus.into(),
            message: message.to_string(),
        }
    }

    /// 1 for semantic failures of the mathematics, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
