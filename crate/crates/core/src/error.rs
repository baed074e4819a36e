use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped the way the command-line front end maps them
/// onto exit codes: input problems, violated mathematical contracts, and
/// exhausted resource budgets.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("rows are not isotropic; witness vector {witness:?}")]
    NotIsotropic { witness: Vec<String> },

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("direction pairs to zero with character {character:?}")]
    DegenerateDirection { character: Vec<i64> },

    #[error("no generic direction found after {attempts} attempts")]
    NoGenericDirection { attempts: usize },

    #[error("consistency violation: {0}")]
    Consistency(String),

    #[error("degree bound violated: guard residual {residual}")]
    DegreeBound { residual: String },

    #[error("resource budget exhausted: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
