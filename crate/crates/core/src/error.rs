use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subspace dimension {0} is outside 0..=6")]
    Dimension(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("group closure exceeded the element budget of {budget}")]
    Budget { budget: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{source_name}: {message}")]
    Load { source_name: String, message: String },

    #[error("unknown structure `{0}`")]
    UnknownStructure(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn load(source_name: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Load {
            source_name: source_name.into(),
            message: message.into(),
        }
    }
}
