//! Command implementations and file formats behind the `semidual` binary.

pub mod codefile;
pub mod commands;
pub mod report;

use std::path::Path;

pub use codefile::{parse_perm, read_perm, write_code, write_perm, CodeFile};
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}line {line}: {message}", file.as_deref().map(|f| format!("{f}: ")).unwrap_or_default())]
    Parse {
        file: Option<String>,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(String),

    #[error(transparent)]
    Library(#[from] semidual::Error),
}

impl CliError {
    pub(crate) fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Parse { line, message, .. } => CliError::Parse {
                file: Some(path.display().to_string()),
                line,
                message,
            },
            other => other,
        }
    }

    /// 1 for a failed internal verification, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(semidual::Error::Consistency(_)) => 1,
            _ => 2,
        }
    }
}
