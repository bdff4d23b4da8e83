//! Crate-wide error type.

/// Errors produced by the thzlink core library.
///
/// Variants are grouped by how a front end should report them: `Parse` and
/// `Validation` are input-file problems, `InvalidArgument` and `OutOfRange`
/// are violated operation preconditions, `Io` is the filesystem.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A scalar argument violated an operation precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A query fell outside the span of the backing data.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Malformed content in an input stream. `line` is 1-based and counts
    /// every physical line, including headers and comments.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally well-formed input that violates a documented invariant.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
