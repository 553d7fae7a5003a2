use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition: bad token `{token}`")]
    Parse { token: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected a function in the {expected} basis, got {found}")]
    WrongBasis {
        expected: &'static str,
        found: &'static str,
    },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("integrality violated: {0}")]
    Integrality(String),

    #[error("cache file {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
