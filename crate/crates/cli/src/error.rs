use std::fmt;

/// Failures surfaced by the command line, each with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad config, unknown names, unreadable files.
    Config(String),
    Core(invar_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use invar_core::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Core(E::Budget(_)) => 3,
            CliError::Core(E::Verification { .. } | E::Hypothesis(_) | E::NotSubgroup(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<invar_core::Error> for CliError {
    fn from(e: invar_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}
