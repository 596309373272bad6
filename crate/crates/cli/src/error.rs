use thiserror::Error;
use vzlef_core::CoreError;
use vzlef_geometry::GeomError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A criterion evaluated to false under `--strict`.
    pub const CRITERION_FAILED: i32 = 2;
    /// Bad flags, arguments or config.
    pub const USAGE: i32 = 64;
    /// An enumeration or sampling cap was exceeded.
    pub const CAP: i32 = 65;
    pub const INTERNAL: i32 = 70;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cap `{name}` exceeded: {value} > {limit}")]
    Cap { name: String, value: usize, limit: usize },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Core(CoreError),

    #[error(transparent)]
    Geom(#[from] GeomError),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("output: {0}")]
    Output(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { name, value, limit } => CliError::Cap { name: name.to_string(), value, limit },
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap { .. } => exit::CAP,
            // Invalid parameters, including points outside the domain and
            // divergent integrals.
            CliError::Usage(_) | CliError::Config(_) | CliError::Core(_) | CliError::Geom(_) => exit::USAGE,
            CliError::Io(_) | CliError::Output(_) => exit::INTERNAL,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Errors with `value > limit` as a cap failure.
pub fn check_cap(name: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(CliError::Cap { name: name.to_string(), value, limit });
    }
    Ok(())
}
