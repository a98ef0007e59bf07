use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{what} too large: exceeds cap of {cap}")]
    TooLarge { what: &'static str, cap: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("element {0} is not a member of the group")]
    NotAMember(String),

    #[error("point {point} is outside the index set of size {size}")]
    PointOutOfRange { point: i64, size: usize },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("contract violated: {0}")]
    ContractViolation(String),

    #[error("malformed chain: {0}")]
    MalformedChain(String),
}
