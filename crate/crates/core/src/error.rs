use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph modes differ ({0} vs {1})")]
    ModeMismatch(crate::graph::Mode, crate::graph::Mode),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("deadline reached")]
    Deadline,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("map is not a verified homomorphism: {0}")]
    NotVerified(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by a search budget or deadline rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::ResourceLimit(_) | Error::Deadline)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
