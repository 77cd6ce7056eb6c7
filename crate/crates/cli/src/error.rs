use std::fmt;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Input = 2,
    Overflow = 3,
    Verification = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Overflow(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl fmt::Display) -> Self {
        CliError::Input(msg.to_string())
    }

    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Input(_) | CliError::Io { .. } => ExitStatus::Input,
            CliError::Overflow(_) => ExitStatus::Overflow,
        }
    }
}

impl From<latticeprop::Error> for CliError {
    fn from(e: latticeprop::Error) -> Self {
        match e {
            latticeprop::Error::Overflow(_) => CliError::Overflow(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
