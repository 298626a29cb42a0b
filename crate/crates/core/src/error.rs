use thiserror::Error;

/// Crate-wide error type.
///
/// Variants fall into three groups that the command-line driver maps onto
/// exit codes: input problems (`Parse`, `Invalid`), violated mathematical
/// hypotheses (`Hypothesis`), and misuse of an operation (`DegreeOverflow`,
/// `Unsupported`).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A standing hypothesis failed (regularity, centrality, stabilization...).
    #[error("hypothesis violated ({hypothesis}): {detail}")]
    Hypothesis { hypothesis: String, detail: String },

    #[error("degree {requested} exceeds table bound {bound}")]
    DegreeOverflow { requested: usize, bound: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn hypothesis(hypothesis: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            hypothesis: hypothesis.into(),
            detail: detail.into(),
        }
    }
}

impl From<crate::exactlin::ParseScalarError> for Error {
    fn from(e: crate::exactlin::ParseScalarError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<crate::exactlin::SeriesError> for Error {
    fn from(e: crate::exactlin::SeriesError) -> Self {
        Error::Invalid(e.to_string())
    }
}
