use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{what} cap exceeded: limit {limit}, reached {actual}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("subset is not a subgroup of the parent group")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not elementary abelian")]
    NotElementaryAbelian,
    #[error("group is not cyclic-by-{0}")]
    NotCyclicByP(u64),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamificationError {
    #[error("Artin-Schreier degree {m} is divisible by p = {p}")]
    BadDegree { p: u64, m: u64 },
    #[error("inconsistent cover: {0}")]
    InconsistentCover(String),
    #[error("bad subgroup order {0} for this filtration")]
    BadOrder(u64),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A text-format error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}
