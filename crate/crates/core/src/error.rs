use thiserror::Error;

/// Errors produced while building states, patterns and operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed state document: {0}")]
    Malformed(String),
    #[error("wrong amplitude count: expected 16, found {0}")]
    WrongAmplitudeCount(usize),
    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),
    #[error("zero state")]
    ZeroState,
    #[error("unknown state name `{0}`")]
    UnknownState(String),
    #[error("state `{name}` expects {expected} coefficients, got {got}")]
    BadParams {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid local operator quartet: {0}")]
    InvalidQuartet(String),
    #[error("invalid pairing pattern: {0}")]
    InvalidPattern(String),
    #[error("pattern degree {0} exceeds the maximum of 12")]
    DegreeOverflow(usize),
    #[error("pattern degree {0} exceeds oracle guard of 6")]
    OracleGuard(usize),
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
}

pub type Result<T> = std::result::Result<T, Error>;
