use std::fmt;

use lagtrace_core::Error as CoreError;

/// Failures surfaced by the file formats and the CLI, each with its own exit
/// code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { line: usize, column: usize, message: String },
    Json(String),
    Io(String),
    Core(CoreError),
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Parse { .. } | CliError::Json(_) => 3,
            CliError::Io(_) => 6,
            CliError::Core(e) => match e {
                CoreError::InvalidGenus(_) | CoreError::Dimension(_) => 2,
                CoreError::InvalidGenerator(_) | CoreError::Parse { .. } => 3,
                CoreError::BudgetExceeded(_) => 5,
                CoreError::NotLieElement | CoreError::RouteMismatch => 7,
                _ => 4,
            },
        }
    }

    /// Attaches a line number to a core parse error from a single line.
    pub(crate) fn at_line(line: usize, offset: usize, e: CoreError) -> Self {
        match e {
            CoreError::Parse { column, message } => CliError::Parse { line, column: column + offset, message },
            CoreError::InvalidGenerator(message) => CliError::Parse { line, column: offset + 1, message },
            other => CliError::Core(other),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            CliError::Json(m) => write!(f, "invalid JSON input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::VerifyFailed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
