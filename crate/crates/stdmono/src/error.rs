use std::path::PathBuf;

/// Everything the driver can fail with.  [`CliError::exit_code`] maps them
/// onto the process exit contract.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    ConfigLine { path: String, line: usize, msg: String },
    #[error("invalid value for '{field}': {msg}")]
    Field { field: &'static str, msg: String },
    #[error("missing required setting '{0}' (pass --{0} or set it in the config file)")]
    Missing(&'static str),
    #[error(transparent)]
    Core(#[from] stdmono_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("golden file {path} does not exist; record it with --record-golden {path}", path = .0.display())]
    MissingGolden(PathBuf),
    #[error("malformed JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
}

impl CliError {
    pub fn field(field: &'static str, msg: impl Into<String>) -> Self {
        CliError::Field { field, msg: msg.into() }
    }

    /// 1 for usage and configuration problems; theorem violations never
    /// reach here, they are recorded as failing checks.
    pub fn exit_code(&self) -> i32 {
        1
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
