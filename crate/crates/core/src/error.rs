use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid partial permutation: {0}")]
    InvalidPartialPerm(String),
    #[error("closure exceeds the size cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("subset is not closed under multiplication and inversion")]
    NotASubsemigroup,
    #[error("subset is empty")]
    EmptySubset,
    #[error("projection is zero")]
    ZeroProjection,
    #[error("upper bounds of the atom set have no minimum")]
    NoLeadingCoefficient,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("map is not unitary: {0}")]
    NotUnitary(String),
    #[error("no separating central element found after {retries} retries")]
    NumericalDegeneracy { retries: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
