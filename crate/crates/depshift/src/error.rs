//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

use crate::conllu::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A malformed line in a targets, spelling-map, gold, or scores file.
    #[error("{path}:{line}: {message}")]
    Data {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A CoNLL-U parse error, fatal in strict mode.
    #[error("{path}: {source}")]
    Corpus {
        path: PathBuf,
        #[source]
        source: ParseError,
    },

    /// A sentence that failed structural validation, fatal in strict mode.
    #[error("{path}: sentence {sentence}: {message}")]
    InvalidSentence {
        path: PathBuf,
        sentence: String,
        message: String,
    },

    #[error("{path}: {message}")]
    Json {
        path: PathBuf,
        message: String,
    },

    /// Invalid configuration value; maps to the usage exit code.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("empty slot side")]
    EmptySlotSide,

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("non-finite score: {0}")]
    NonFiniteScore(f64),

    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),

    #[error("prediction/gold key sets differ: {0}")]
    KeyMismatch(String),

    #[error("unknown target {target:?}; available: {available}")]
    UnknownTarget { target: String, available: String },

    #[error("unknown slot {slot:?} for target {target:?}; available: {available}")]
    UnknownSlot {
        target: String,
        slot: String,
        available: String,
    },

    /// Wraps an error with the pipeline stage it occurred in.
    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn data(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Data {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    pub fn in_stage(self, stage: impl Into<String>) -> Self {
        Error::Stage {
            stage: stage.into(),
            source: Box::new(self),
        }
    }

    /// True for errors that signal misuse of the tool rather than bad data.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Config(_))
            || matches!(self, Error::Stage { source, .. } if source.is_usage())
    }
}

/// Attach a stage name to the error side of a result.
pub(crate) trait StageExt<T> {
    fn stage(self, name: &str) -> Result<T>;
}

impl<T> StageExt<T> for Result<T> {
    fn stage(self, name: &str) -> Result<T> {
        self.map_err(|e| e.in_stage(name))
    }
}
