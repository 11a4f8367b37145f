use std::io;
use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] gcodelab_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad group spec `{spec}`: {reason}")]
    GroupSpec { spec: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl Error {
    /// Exit status for the CLI: 1 when a checked statement failed, 2 for
    /// everything that is a problem with the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(gcodelab_core::Error::Violation(_)) => 1,
            _ => 2,
        }
    }
}
