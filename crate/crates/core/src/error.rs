use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("degree {0} is not allowed here: {1}")]
    Degree(u32, String),

    #[error("not codimension 3")]
    NotArtinian,

    #[error("unit ideal has no quotient to classify")]
    UnitIdeal,

    #[error("degree cap {0} exceeded while computing a Groebner basis")]
    DegreeCap(u32),

    #[error("unclassifiable Tor algebra: {0}")]
    Unclassifiable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Load {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Load { .. } => 2,
            Error::Unclassifiable(_) | Error::Internal(_) | Error::DegreeCap(_) => 3,
            _ => 1,
        }
    }
}
