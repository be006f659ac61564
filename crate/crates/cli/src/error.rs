use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] braidcert::error::Error),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("task `{0}` needs a braid word")]
    MissingBraid(&'static str),

    #[error("line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.name(),
            CliError::Parse { .. } => "ParseError",
            CliError::MissingBraid(_) => "MissingBraid",
            CliError::Corpus { .. } => "CorpusError",
            CliError::Io { .. } => "IoError",
        }
    }

    /// Pins a braid parse error to a line, shifting its column by `offset`.
    pub fn at_line(e: braidcert::error::Error, line: usize, offset: usize) -> CliError {
        match e {
            braidcert::error::Error::Parse { column, message } => CliError::Parse {
                line,
                column: column + offset,
                message,
            },
            other => CliError::Lib(other),
        }
    }

    pub fn position(&self) -> Option<(usize, Option<usize>)> {
        match self {
            CliError::Parse { line, column, .. } => Some((*line, Some(*column))),
            CliError::Corpus { line, .. } => Some((*line, None)),
            _ => None,
        }
    }
}
