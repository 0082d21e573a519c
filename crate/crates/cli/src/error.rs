use std::fmt;
use std::path::Path;

use sumsetlab::SumsetError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_VERDICT: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Params(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Params(_) => EXIT_PARAMS,
            CliError::Io(_) => EXIT_IO,
        }
    }

    pub fn io(path: &Path, err: impl fmt::Display) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Params(m) => f.write_str(m),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<SumsetError> for CliError {
    fn from(e: SumsetError) -> Self {
        CliError::Params(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Params(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
