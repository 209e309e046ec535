use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Gram-Schmidt hit a residual below tolerance; the caller should resample.
    #[error("vectors are linearly dependent (residual norm {residual:e} at vector {index})")]
    LinearDependence { index: usize, residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid proportions: {0}")]
    InvalidProportions(String),

    #[error("point is not a unit vector (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("point cloud is empty")]
    EmptyCloud,

    #[error("requested {requested} landmarks from a cloud of {available} points")]
    CountTooLarge { requested: usize, available: usize },

    #[error("witness complex needs at least 2 landmarks, got {0}")]
    TooFewLandmarks(usize),

    #[error("simplex {simplex:?} has a facet missing from the filtration")]
    MissingFace { simplex: Vec<u32> },

    #[error("filtration is not ordered: simplex {position} precedes one of its faces or is out of canonical order")]
    Unordered { position: usize },

    #[error("simplex count exceeded the cap of {cap}")]
    ResourceLimit { cap: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
