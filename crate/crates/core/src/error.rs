use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Caller supplied parameters outside the operation's domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("lookup failed: {0}")]
    Lookup(String),

    /// Malformed input data. `line` is 1-based when the source is text.
    #[error("format error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Format { line: Option<usize>, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format {
            line: None,
            msg: msg.into(),
        }
    }

    pub(crate) fn format_at(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line: Some(line),
            msg: msg.into(),
        }
    }
}
