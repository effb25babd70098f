use thiserror::Error;

pub type Result<T> = std::result::Result<T, GeomError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    /// Caller supplied malformed arguments (wrong dimension, bad step, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// Argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A surface specification violates its invariants on the sample.
    #[error("invalid surface spec: {0}")]
    Spec(String),
    #[error("mesh construction failed: {0}")]
    Construction(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// The requested quantity is degenerate at this input (e.g. a zero rate).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
}

impl GeomError {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        GeomError::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        GeomError::Domain(msg.into())
    }
}
