use thiserror::Error;

/// Errors raised by partition, game and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates the operation's precondition.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A subpartition `λ[i,j]` would be empty.
    #[error("subpartition [{0},{1}] is undefined")]
    UndefinedSubpartition(usize, usize),
    /// The position has no legal moves.
    #[error("position {0} is terminal")]
    Terminal(String),
    /// A textual literal could not be parsed; carries the offending token.
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
