use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The operation is undefined on this input (e.g. a disconnected graph).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid amalgam: {0}")]
    Amalgam(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
