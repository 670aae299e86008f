use std::fmt;
use std::path::PathBuf;

/// Errors surfaced by the command-line layer, each mapped to an exit code.
#[derive(Debug)]
pub enum DngError {
    Core(dng_core::Error),
    Io { path: PathBuf, source: std::io::Error },
    Input(String),
    Json(serde_json::Error),
}

impl DngError {
    /// 3 for cap and capability errors, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            DngError::Core(e) if e.is_capability() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for DngError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DngError::Core(e) => write!(f, "{e}"),
            DngError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            DngError::Input(msg) => f.write_str(msg),
            DngError::Json(e) => write!(f, "json: {e}"),
        }
    }
}

impl std::error::Error for DngError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            DngError::Core(e) => Some(e),
            DngError::Io { source, .. } => Some(source),
            DngError::Json(e) => Some(e),
            DngError::Input(_) => None,
        }
    }
}

impl From<dng_core::Error> for DngError {
    fn from(e: dng_core::Error) -> Self {
        DngError::Core(e)
    }
}

impl From<serde_json::Error> for DngError {
    fn from(e: serde_json::Error) -> Self {
        DngError::Json(e)
    }
}

pub type Result<T> = std::result::Result<T, DngError>;
