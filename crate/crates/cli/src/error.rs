use std::fmt;
use std::process::ExitCode;

/// Exit status classes of the command-line tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A verification check failed or a computation hit a numerical fault.
    Failure,
    /// Bad arguments or parameters.
    Usage,
    /// Reading or writing files, or parsing their contents.
    Io,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Failure => 1,
            Status::Usage => 2,
            Status::Io => 3,
        }
    }
}

impl From<Status> for ExitCode {
    fn from(status: Status) -> Self {
        ExitCode::from(status.code())
    }
}

/// An error together with the exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub error: anyhow::Error,
}

impl CliError {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        CliError {
            status: Status::Usage,
            error: error.into(),
        }
    }

    pub fn io(error: impl Into<anyhow::Error>) -> Self {
        CliError {
            status: Status::Io,
            error: error.into(),
        }
    }

    pub fn failure(error: impl Into<anyhow::Error>) -> Self {
        CliError {
            status: Status::Failure,
            error: error.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

impl From<halfshift::Error> for CliError {
    fn from(e: halfshift::Error) -> Self {
        use halfshift::Error::*;
        match e {
            Internal(_) | NoConvergence(_) | NegativeTail { .. } | HorizonExceeded { .. } => CliError::failure(e),
            _ => CliError::usage(e),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
