use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("search budget exceeded: {0}")]
    SearchBudget(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("construction integrity violated: {0}")]
    ConstructionIntegrity(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
