use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] netphys::Error),
}

/// Body of the JSON object written to standard error on failure.
#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn report(&self) -> ErrorReport {
        use netphys::Error as E;
        let (kind, line) = match self {
            CliError::Io { .. } => ("io", None),
            CliError::Usage(_) => ("usage", None),
            CliError::Core(e) => match e {
                E::Parse { line, .. } => ("parse", Some(*line)),
                E::Disconnected | E::DifferentComponents(..) => ("disconnected", None),
                E::DirectedUnsupported => ("directed_unsupported", None),
                E::TooLarge { .. } => ("too_large", None),
                E::NoConvergence => ("no_convergence", None),
                E::BadParams(_)
                | E::BadProbability(_)
                | E::BadK { .. }
                | E::BadEpsilon { .. }
                | E::BadInitialState(_)
                | E::EtaTooSmall { .. }
                | E::KTooSmall { .. }
                | E::OutOfRange { .. } => ("bad_params", None),
                _ => ("computation", None),
            },
        };
        let path = match self {
            CliError::Io { path, .. } => Some(path.display().to_string()),
            _ => None,
        };
        ErrorReport { kind, message: self.to_string(), line, path }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
