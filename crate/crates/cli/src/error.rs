use thiserror::Error;

use kcat::AxiomSuiteReport;

/// Everything a command can fail with. Located errors carry 1-based
/// line and column.
#[derive(Debug, Clone, Error)]
pub enum CliError {
    #[error("{line}:{col}: parse error: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: shape mismatch: {msg}")]
    ShapeMismatch { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown role: {msg}")]
    UnknownRole { line: usize, col: usize, msg: String },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("cannot emit: {0}")]
    Emit(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] kcat::Error),
    /// A precondition suite failed before a construction was attempted.
    #[error("precondition `{suite}` failed for `{input}`")]
    Precondition {
        input: String,
        suite: String,
        report: Box<AxiomSuiteReport>,
    },
}

impl CliError {
    /// Process exit code: 1 for failed axioms, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition { .. } => 1,
            _ => 2,
        }
    }

    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub(crate) fn role(line: usize, col: usize, msg: impl Into<String>) -> CliError {
        CliError::UnknownRole {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub(crate) fn shape(line: usize, col: usize, msg: impl Into<String>) -> CliError {
        CliError::ShapeMismatch {
            line,
            col,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
