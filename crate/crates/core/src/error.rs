use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument was non-finite or outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: f64 },

    /// A computation would leave the representable double range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// The sign criterion on (cosh λ sin θ − sinh λ) disagrees with the
    /// trace classification of the same matrix.
    #[error("sign convention violated: {0}")]
    ConventionViolation(String),

    #[error("invalid config at `{path}`: {message}")]
    InvalidConfig { path: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidConfig {
            path: path.into(),
            message: message.into(),
        }
    }
}
